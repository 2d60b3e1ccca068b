#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wd4/discriminant.hpp"
#include "wd4/forms.hpp"

namespace wd4 {

enum class PlotKind { order2_plane, order3_disc };

struct PlotPoint {
    Triple source;
    double x = 0.0, y = 0.0;
};

struct PlotSpec {
    PlotKind kind = PlotKind::order3_disc;
    std::int64_t D = 0;
    std::vector<PlotPoint> points;
    bool include_domain = true;  // order3_disc only
    int width = 600, height = 600;
    int precision = 6;
};

// Eigenvector first coordinates in the plane, two per order-2 triple
// (the +-branch then the --branch), in triple order.
PlotSpec order2_plot(const Discriminant& d);

// Domain points f(a,b,c,D) in the disc of radius 1/sqrt(2), in triple order.
PlotSpec order3_plot(const Discriminant& d);

// Deterministic SVG: the disc boundary, the three geodesic sides of the
// counting domain (two straight segments through the origin, one circular
// arc), and one marker circle of class "pt" per point. Coordinates printed
// at the requested precision. Throws PointOutOfRange if an order-3 point
// lies at or beyond radius 1/sqrt(2) + 1e-9.
std::string render_svg(const PlotSpec& spec);

// CSV with header "a,b,c,D,x,y", one row per point, same order and precision
// as the SVG. Byte-identical across reruns.
std::string export_csv(const PlotSpec& spec);

}  // namespace wd4
