#include "wd4/geometry.hpp"

#include <cmath>
#include <string>

namespace wd4 {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kBand = 1e-9;  // float margin that forces the exact path

std::string triple_str(const Triple& t) {
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) +
           "|D=" + std::to_string(t.discriminant) + ")";
}

bool on_form(const Triple& t) {
    return 2 * t.a * t.a - 3 * t.b * t.b - t.c * t.c == 2 * t.discriminant;
}

// Exact region test in the coordinates (x, y) with f = x + i sqrt(3) y:
//   |f|^2 = x^2 + 3y^2 <= 1/4
//   wedge 0 <= arg f < pi/3:  y >= 0, x > 0, y < x
//   arc  x^2 + 3y^2 - (3/2)(x + y) + 1/2 >= 0, equality kept iff x - 3y > 0
// plus the two included vertices (0,0) and (1/4,1/4).
bool exact_region_test(const QuadraticNumber& x, const QuadraticNumber& y) {
    static const QuadraticNumber zero{Rational(0)};
    static const QuadraticNumber quarter{Rational(1, 4)};
    if (x == zero && y == zero) return true;
    if (x == quarter && y == quarter) return true;

    const QuadraticNumber norm = x * x + QuadraticNumber(Rational(3)) * (y * y);
    if ((QuadraticNumber(Rational(1, 4)) - norm).sign() < 0) return false;
    if (y.sign() < 0) return false;
    if (x.sign() <= 0) return false;
    if ((x - y).sign() <= 0) return false;

    const QuadraticNumber arc =
        norm - QuadraticNumber(Rational(3, 2)) * (x + y) + QuadraticNumber(Rational(1, 2));
    const int arc_sign = arc.sign();
    if (arc_sign < 0) return false;
    if (arc_sign == 0) {
        const QuadraticNumber tie = x - QuadraticNumber(Rational(3)) * y;
        return tie.sign() > 0;
    }
    return true;
}

}  // namespace

TriangleDomain triangle_domain() {
    TriangleDomain dom;
    const Rational q14(1, 4);
    dom.order2.x = QuadraticNumber(Rational(3, 4), Rational(-1, 4), 3);
    dom.order2.y = QuadraticNumber(Rational(1, 4), Rational(-1, 12), 3);
    dom.order2.shadow = {dom.order2.x.to_double(), kSqrt3 * dom.order2.y.to_double()};
    dom.order6.x = QuadraticNumber(q14);
    dom.order6.y = QuadraticNumber(q14);
    dom.order6.shadow = {0.25, kSqrt3 * 0.25};
    dom.order6_origin.x = QuadraticNumber(Rational(0));
    dom.order6_origin.y = QuadraticNumber(Rational(0));
    dom.order6_origin.shadow = {0.0, 0.0};
    dom.disc_radius = 1.0 / std::sqrt(2.0);
    return dom;
}

ExactDiscPoint f_map(const Triple& t) {
    if (!on_form(t))
        throw DomainError("triple " + triple_str(t) + " does not solve 2a^2-3b^2-c^2 = 2D");
    if (t.a >= 0) throw DomainError("triple " + triple_str(t) + " needs a < 0");

    const std::int64_t D = t.discriminant;
    // On the form, 2a^2 = 2D + 3b^2 + c^2 >= 2D forces a^2 > D (D non-square),
    // so the rationalised denominator 2(a^2 - D) never vanishes.
    const Rational den = Rational(2) * (Rational(t.a) * t.a - D);

    ExactDiscPoint p;
    p.x = QuadraticNumber(Rational(t.c) * t.a / den, Rational(t.c) / den, D);
    p.y = QuadraticNumber(Rational(t.b) * t.a / den, Rational(t.b) / den, D);
    p.source = t;
    const double s = std::sqrt(static_cast<double>(D));
    const double scale = 1.0 / (2.0 * (static_cast<double>(t.a) - s));
    p.shadow = {static_cast<double>(t.c) * scale, kSqrt3 * static_cast<double>(t.b) * scale};
    return p;
}

bool in_fundamental_domain_exact(const Triple& t) {
    const std::int64_t D = t.discriminant;
    const std::int64_t a2 = t.a * t.a;
    if (!(t.a < 0 && D < a2 && a2 < 9 * D)) return false;
    if (!(t.c < t.b && t.b <= 0)) return false;
    const std::int64_t edge = 4 * t.a - 3 * t.b - 3 * t.c;
    if (edge > 0) return false;
    if (edge == 0 && !(t.c < 3 * t.b)) return false;
    return true;
}

bool in_fundamental_domain_geometric(const ExactDiscPoint& p) {
    // Float pass; any test within the guard band defers to exact arithmetic.
    const double re = p.shadow.real();
    const double im = p.shadow.imag();
    const double y = im / kSqrt3;
    const double norm = re * re + im * im;

    const auto decide = [](double margin) {
        // margin > 0 required; near zero is undecided
        if (margin > kBand) return 1;
        if (margin < -kBand) return -1;
        return 0;
    };

    // vertices sit on boundaries; their shadows always escalate
    if (std::abs(re) > kBand || std::abs(im) > kBand) {
        const int c_norm = decide(0.25 - norm);
        const int c_im = decide(im);
        const int c_re = decide(re);
        const int c_wedge = decide(re - y);
        const double arc = norm - 1.5 * (re + y) + 0.5;
        const int c_arc = decide(arc);
        if (c_norm < 0 || c_im < 0 || c_re < 0 || c_wedge < 0 || c_arc < 0) return false;
        if (c_norm > 0 && c_im > 0 && c_re > 0 && c_wedge > 0 && c_arc > 0) return true;
    }
    return exact_region_test(p.x, p.y);
}

std::pair<std::complex<double>, std::complex<double>> order2_eigenform_coords(const Triple& t) {
    const std::int64_t D = t.discriminant;
    if (t.a * t.a + t.b * t.b + t.c * t.c != D)
        throw DomainError("triple " + triple_str(t) + " does not solve a^2+b^2+c^2 = D");
    if (t.b * t.b == D)
        throw DegenerateDenominator("triple " + triple_str(t) + ": b^2 = D");
    const std::complex<double> half(-0.5, 0.5);  // (-1+i)/2
    const std::complex<double> num(static_cast<double>(t.a), static_cast<double>(-t.c));
    const double s = std::sqrt(static_cast<double>(D));
    const std::complex<double> plus = half * num / (static_cast<double>(t.b) + s);
    const std::complex<double> minus = half * num / (static_cast<double>(t.b) - s);
    return {plus, minus};
}

}  // namespace wd4
