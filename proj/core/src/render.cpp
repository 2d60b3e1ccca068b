#include "wd4/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "wd4/geometry.hpp"

namespace wd4 {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kDiscRadius = 0.70710678118654752440;  // 1/sqrt(2)
constexpr int kMargin = 20;

// Fixed-point decimal with the platform's correctly-rounded conversion;
// negative zero is normalised so output is reproducible byte for byte.
std::string fmt_fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    std::string s = buf;
    if (s[0] == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
    return s;
}

struct Mapper {
    double cx, cy, unit;
    double px(double x) const { return cx + x * unit; }
    double py(double y) const { return cy - y * unit; }
};

void append_marker(std::string& svg, const Mapper& m, double x, double y, int precision) {
    svg += "<circle class=\"pt\" cx=\"" + fmt_fixed(m.px(x), precision) + "\" cy=\"" +
           fmt_fixed(m.py(y), precision) + "\" r=\"2.5\" fill=\"#b03a2e\"/>\n";
}

}  // namespace

PlotSpec order2_plot(const Discriminant& d) {
    PlotSpec spec;
    spec.kind = PlotKind::order2_plane;
    spec.D = d.value;
    spec.include_domain = false;
    for (const Triple& t : enumerate_order2(d)) {
        const auto [plus, minus] = order2_eigenform_coords(t);
        spec.points.push_back({t, plus.real(), plus.imag()});
        spec.points.push_back({t, minus.real(), minus.imag()});
    }
    return spec;
}

PlotSpec order3_plot(const Discriminant& d) {
    PlotSpec spec;
    spec.kind = PlotKind::order3_disc;
    spec.D = d.value;
    for (const Triple& t : enumerate_order3(d)) {
        const ExactDiscPoint p = f_map(t);
        spec.points.push_back({t, p.shadow.real(), p.shadow.imag()});
    }
    return spec;
}

std::string render_svg(const PlotSpec& spec) {
    const int w = spec.width, h = spec.height;
    const int prec = spec.precision;
    const double half = std::min(w, h) / 2.0 - kMargin;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
                      "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
                      " " + std::to_string(h) + "\">\n";

    if (spec.kind == PlotKind::order3_disc) {
        for (const PlotPoint& p : spec.points)
            if (std::hypot(p.x, p.y) >= kDiscRadius + 1e-9)
                throw PointOutOfRange("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                      ") outside the disc of radius 1/sqrt(2)");
        const Mapper m{w / 2.0, h / 2.0, half / kDiscRadius};
        svg += "<circle class=\"disc\" cx=\"" + fmt_fixed(m.cx, prec) + "\" cy=\"" +
               fmt_fixed(m.cy, prec) + "\" r=\"" + fmt_fixed(half, prec) +
               "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        if (spec.include_domain) {
            // two straight geodesic sides through the origin, one circular arc
            const double v6x = 0.25, v6y = kSqrt3 / 4.0;
            const double arc_r = 0.5 * m.unit;
            svg += "<line class=\"domain\" x1=\"" + fmt_fixed(m.px(0), prec) + "\" y1=\"" +
                   fmt_fixed(m.py(0), prec) + "\" x2=\"" + fmt_fixed(m.px(0.5), prec) +
                   "\" y2=\"" + fmt_fixed(m.py(0), prec) +
                   "\" stroke=\"#1f618d\" stroke-width=\"1\"/>\n";
            svg += "<line class=\"domain\" x1=\"" + fmt_fixed(m.px(0), prec) + "\" y1=\"" +
                   fmt_fixed(m.py(0), prec) + "\" x2=\"" + fmt_fixed(m.px(v6x), prec) +
                   "\" y2=\"" + fmt_fixed(m.py(v6y), prec) +
                   "\" stroke=\"#1f618d\" stroke-width=\"1\"/>\n";
            svg += "<path class=\"domain\" d=\"M " + fmt_fixed(m.px(0.5), prec) + " " +
                   fmt_fixed(m.py(0), prec) + " A " + fmt_fixed(arc_r, prec) + " " +
                   fmt_fixed(arc_r, prec) + " 0 0 1 " + fmt_fixed(m.px(v6x), prec) + " " +
                   fmt_fixed(m.py(v6y), prec) +
                   "\" fill=\"none\" stroke=\"#1f618d\" stroke-width=\"1\"/>\n";
        }
        for (const PlotPoint& p : spec.points) append_marker(svg, m, p.x, p.y, prec);
    } else {
        double extent = 1.0;
        for (const PlotPoint& p : spec.points)
            extent = std::max({extent, 1.1 * std::abs(p.x), 1.1 * std::abs(p.y)});
        const Mapper m{w / 2.0, h / 2.0, half / extent};
        svg += "<line class=\"axis\" x1=\"" + fmt_fixed(m.cx - half, prec) + "\" y1=\"" +
               fmt_fixed(m.cy, prec) + "\" x2=\"" + fmt_fixed(m.cx + half, prec) + "\" y2=\"" +
               fmt_fixed(m.cy, prec) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        svg += "<line class=\"axis\" x1=\"" + fmt_fixed(m.cx, prec) + "\" y1=\"" +
               fmt_fixed(m.cy - half, prec) + "\" x2=\"" + fmt_fixed(m.cx, prec) + "\" y2=\"" +
               fmt_fixed(m.cy + half, prec) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        for (const PlotPoint& p : spec.points) append_marker(svg, m, p.x, p.y, prec);
    }
    svg += "</svg>\n";
    return svg;
}

std::string export_csv(const PlotSpec& spec) {
    std::string csv = "a,b,c,D,x,y\n";
    for (const PlotPoint& p : spec.points) {
        csv += std::to_string(p.source.a) + "," + std::to_string(p.source.b) + "," +
               std::to_string(p.source.c) + "," + std::to_string(spec.D) + "," +
               fmt_fixed(p.x, spec.precision) + "," + fmt_fixed(p.y, spec.precision) + "\n";
    }
    return csv;
}

}  // namespace wd4
