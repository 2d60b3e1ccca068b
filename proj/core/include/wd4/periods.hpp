#pragma once

#include <array>
#include <complex>

#include "wd4/forms.hpp"
#include "wd4/quadratic.hpp"

namespace wd4 {

using Complex = std::complex<double>;
using Mat2c = std::array<std::array<Complex, 2>, 2>;
using Mat24c = std::array<std::array<Complex, 4>, 2>;
using Mat4i = std::array<std::array<std::int64_t, 4>, 4>;
using Mat4q = std::array<std::array<Rational, 4>, 4>;

// The two abelian-surface families carrying the orbifold points: the
// plane-quartic (order-2/order-4) family and the windmill (order-3/order-6)
// family.
enum class Family { quartic, windmill };

struct PeriodData {
    Mat24c pi{};          // 2x4 period matrix of the polarised lattice
    Mat4i intersection{}; // symplectic pairing in the same basis
    Family family = Family::quartic;
    Complex f{};          // windmill parameter (0 for the quartic family)
};

// Fixed quartic-family period matrix (entries in Q(i), exact to the double).
PeriodData quartic_periods();

// Windmill-family period matrix at parameter f, |f|^2 < 1/2.
// Throws OutOfDisc.
PeriodData windmill_periods(Complex f);

// Endomorphism certificate for one triple: the analytic 2x2 action A with
// A^2 = D and the rational 4x4 action R with R^2 = D (integer entries), plus
// the halved order generator (R/2 for D = 0 mod 4, (Id+R)/2 for D = 1 mod 4)
// and its analytic counterpart. The generator is integral exactly when the
// triple satisfies the parity conditions.
struct RepresentationPair {
    Mat2c analytic{};
    Mat4q rational{};
    Mat2c generator_analytic{};
    Mat4q generator{};
    Family family = Family::quartic;
    Triple source;
};

// Raw matrix builders (no form-equation validation; used for negative
// controls and property tests). The windmill matrix has entries (c-b)/2 and
// (b+c)/2, hence is rational-valued for parity-violating inputs.
Mat2c quartic_analytic(std::int64_t a, std::int64_t b, std::int64_t c);
Mat4i quartic_rational(std::int64_t a, std::int64_t b, std::int64_t c);
Mat4q windmill_rational(std::int64_t a, std::int64_t b, std::int64_t c);
Mat4q half_generator(const Mat4q& rational, std::int64_t D);

// Validated certificates. quartic_representation requires a^2+b^2+c^2 = D;
// windmill_representation requires 2a^2-3b^2-c^2 = 2D. D itself is taken
// formally (parity and integrality are the caller's concern). Throws
// FormViolation.
RepresentationPair quartic_representation(std::int64_t a, std::int64_t b, std::int64_t c,
                                          std::int64_t D);
RepresentationPair windmill_representation(std::int64_t a, std::int64_t b, std::int64_t c,
                                           std::int64_t D);

bool is_integral(const Mat4q& m);

// Exact Rosati self-adjointness: E^{-1} R^T E == R.
bool rosati_self_adjoint(const Mat4q& R, const Mat4i& E);

// Exact square: R^2 == s * Id.
bool squares_to_scalar(const Mat4q& R, const Rational& s);

// max |(A Pi - Pi R)_ij|; < 1e-10 certifies the pair acts on the lattice.
double endomorphism_residual(const RepresentationPair& rep, const PeriodData& pd);

struct RiemannReport {
    bool holds = false;
    // Minimal eigenvalue of the positively-oriented Hermitian form
    // i Pi E^{-1} Pi^H (the form or its negative, whichever is positive
    // definite); <= 0 signals an indefinite or singular form.
    double hermitian_min_eigenvalue = 0.0;
};

// First relation Pi E^{-1} Pi^T = 0 to 1e-10 and definiteness of the
// Hermitian form; see RiemannReport for the orientation convention.
RiemannReport riemann_relations(const PeriodData& pd);

}  // namespace wd4
