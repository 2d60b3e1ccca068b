#include <doctest.h>

#include <string>

#include "wd4/render.hpp"

using namespace wd4;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::size_t count_lines(const std::string& text) {
    return count_occurrences(text, "\n");
}

}  // namespace

TEST_CASE("order-3 plots carry one marker per counted point") {
    const PlotSpec spec17 = order3_plot(validate(17));
    CHECK(spec17.points.size() == 2);
    const std::string svg17 = render_svg(spec17);
    CHECK(count_occurrences(svg17, "class=\"pt\"") == 2);
    CHECK(count_occurrences(svg17, "class=\"disc\"") == 1);
    CHECK(count_occurrences(svg17, "class=\"domain\"") == 3);

    const PlotSpec spec2828 = order3_plot(validate(2828));
    CHECK(count_occurrences(render_svg(spec2828), "class=\"pt\"") == 20);
}

TEST_CASE("empty plots still draw the domain") {
    const PlotSpec spec = order3_plot(validate(12));
    CHECK(spec.points.empty());
    const std::string svg = render_svg(spec);
    CHECK(count_occurrences(svg, "class=\"pt\"") == 0);
    CHECK(count_occurrences(svg, "class=\"domain\"") == 3);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("order-2 plots emit two eigenform markers per triple") {
    const PlotSpec spec8 = order2_plot(validate(8));
    CHECK(spec8.points.size() == 24);
    CHECK(count_occurrences(render_svg(spec8), "class=\"pt\"") == 24);

    const PlotSpec spec20 = order2_plot(validate(20));
    CHECK(spec20.points.size() == 48);
    const std::string csv = export_csv(spec20);
    CHECK(count_lines(csv) == 49);  // header + 48 rows
    CHECK(csv.rfind("a,b,c,D,x,y\n", 0) == 0);
}

TEST_CASE("CSV rows carry the source triple and the coordinates") {
    const PlotSpec spec = order3_plot(validate(17));
    const std::string csv = export_csv(spec);
    CHECK(count_lines(csv) == 3);
    CHECK(csv.find("-7,0,-8,17,0.359612,0.000000\n") != std::string::npos);
    CHECK(csv.find("-5,0,-4,17,0.219224,0.000000\n") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    const std::string a = render_svg(order3_plot(validate(2828)));
    const std::string b = render_svg(order3_plot(validate(2828)));
    CHECK(a == b);
    const std::string c = export_csv(order2_plot(validate(20)));
    const std::string d = export_csv(order2_plot(validate(20)));
    CHECK(c == d);
}

TEST_CASE("negative zero never reaches the output") {
    PlotSpec spec;
    spec.kind = PlotKind::order2_plane;
    spec.D = 8;
    spec.points.push_back({Triple{2, 2, 0, FormKind::order2, 8}, -1e-12, 0.0});
    const std::string csv = export_csv(spec);
    CHECK(csv.find("-0.000000") == std::string::npos);
    CHECK(csv.find("2,2,0,8,0.000000,0.000000\n") != std::string::npos);
}

TEST_CASE("points outside the disc are rejected") {
    PlotSpec spec;
    spec.kind = PlotKind::order3_disc;
    spec.D = 8;
    spec.points.push_back({Triple{-4, 0, -4, FormKind::order3, 8}, 0.8, 0.0});
    CHECK_THROWS_AS(render_svg(spec), PointOutOfRange);
}

TEST_CASE("precision is honoured") {
    PlotSpec spec = order3_plot(validate(17));
    spec.precision = 3;
    const std::string csv = export_csv(spec);
    CHECK(csv.find("-5,0,-4,17,0.219,0.000\n") != std::string::npos);
}
