#pragma once

#include <complex>
#include <utility>

#include "wd4/forms.hpp"
#include "wd4/quadratic.hpp"

namespace wd4 {

// Point of the order-3 counting domain written f = x + i*sqrt(3)*y with x, y
// exact in Q(sqrt(D)); shadow is the floating evaluation of f.
struct ExactDiscPoint {
    QuadraticNumber x;  // Re f
    QuadraticNumber y;  // Im f / sqrt(3)
    Triple source;
    std::complex<double> shadow;
};

struct DomainVertex {
    QuadraticNumber x, y;        // exact, over Q(sqrt(3)) at most
    std::complex<double> shadow; // accurate to 1e-14
};

// The hyperbolic triangle underlying the counting domain, inside the disc of
// radius 1/sqrt(2): an order-2 vertex on the boundary arc, an order-6 vertex
// at angle pi/3, and an order-6 vertex at the origin.
struct TriangleDomain {
    DomainVertex order2;        // ((3-sqrt 3)/4, (3-sqrt 3)/12), excluded
    DomainVertex order6;        // (1/4, 1/4), included
    DomainVertex order6_origin; // (0, 0), included
    double disc_radius = 0.0;   // 1/sqrt(2)
};

TriangleDomain triangle_domain();

// Maps a triple with 2a^2 - 3b^2 - c^2 = 2D, a < 0 to its domain point
//   f = (sqrt(3) b i + c) / (2 (a - sqrt(D)))
// with exact rationalised coordinates x = c(a+sqrt D)/(2(a^2-D)),
// y = b(a+sqrt D)/(2(a^2-D)). Throws DomainError.
ExactDiscPoint f_map(const Triple& t);

// The counting-domain inequalities on the raw integers (no gcd filter):
// D < a^2 < 9D with a < 0, c < b <= 0, and 4a-3b-3c < 0 or (= 0 and c < 3b).
bool in_fundamental_domain_exact(const Triple& t);

// Independent region test on the point itself: |f|^2 <= 1/4, 0 <= arg f <
// pi/3, outside or on the boundary arc |f - (3+sqrt(3)i)/4| >= 1/2, with
// on-arc points kept exactly when arg f < pi/6, and the two order-6 vertices
// counted as inside. Decides with floats first and escalates to exact
// arithmetic when any test lands within 1e-9 of a boundary.
bool in_fundamental_domain_geometric(const ExactDiscPoint& p);

// First coordinates of the order-2 eigenvectors
//   w(+-) = ((-1+i)/2) (a - c i) / (b +- sqrt(D)),
// returned as (w+, w-). The +-labelled vector pairs with eigenvalue -+sqrt(D)
// under the corresponding analytic matrix. Throws DegenerateDenominator.
std::pair<std::complex<double>, std::complex<double>> order2_eigenform_coords(const Triple& t);

}  // namespace wd4
