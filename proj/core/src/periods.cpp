#include "wd4/periods.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wd4 {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

const Complex kZeta6{0.5, kSqrt3 / 2.0};        // primitive 6th root of unity
const Complex kZeta6Inv{0.5, -kSqrt3 / 2.0};
const Complex kZeta6Sq{-0.5, kSqrt3 / 2.0};
const Complex kZeta6InvSq{-0.5, -kSqrt3 / 2.0};

Mat4q to_rational(const Mat4i& m) {
    Mat4q out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = Rational(m[i][j]);
    return out;
}

Mat4q mat_mul(const Mat4q& a, const Mat4q& b) {
    Mat4q out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s(0);
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

Mat4q mat_transpose(const Mat4q& a) {
    Mat4q out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = a[j][i];
    return out;
}

// Exact inverse by Gauss-Jordan elimination; the pairing matrices are
// unimodular up to small factors, so a pivot always exists.
Mat4q mat_inverse(const Mat4q& a) {
    Mat4q m = a;
    Mat4q inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw DomainError("pairing matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = m[col][col];
        for (int j = 0; j < 4; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int j = 0; j < 4; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

std::array<std::array<double, 4>, 4> to_double(const Mat4q& m) {
    std::array<std::array<double, 4>, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = m[i][j].convert_to<double>();
    return out;
}

}  // namespace

PeriodData quartic_periods() {
    PeriodData pd;
    pd.family = Family::quartic;
    pd.pi = {{{Complex(-0.5, -0.5), Complex(1, 0), Complex(1, 0), Complex(0, 0)},
              {Complex(1, 0), Complex(-1, -1), Complex(0, 0), Complex(2, 0)}}};
    pd.intersection = {{{0, 0, 1, 0}, {0, 0, 0, 2}, {-1, 0, 0, 0}, {0, -2, 0, 0}}};
    return pd;
}

PeriodData windmill_periods(Complex f) {
    if (std::norm(f) >= 0.5)
        throw OutOfDisc("windmill parameter needs |f|^2 < 1/2, got |f|^2 = " +
                        std::to_string(std::norm(f)));
    PeriodData pd;
    pd.family = Family::windmill;
    pd.f = f;
    pd.pi = {{{2.0 * f, 2.0 * kZeta6Sq * f, Complex(1, 0), kZeta6Inv},
              {Complex(2, 0), 2.0 * kZeta6InvSq, 2.0 * f, 2.0 * kZeta6 * f}}};
    pd.intersection = {{{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
    return pd;
}

Mat2c quartic_analytic(std::int64_t a, std::int64_t b, std::int64_t c) {
    const auto ad = static_cast<double>(a);
    const auto bd = static_cast<double>(b);
    const auto cd = static_cast<double>(c);
    // a*A_gamma + b*A_delta + c*i*A_gamma*A_delta on the (1,0)-forms
    return {{{Complex(bd, 0), Complex((ad - cd) / 2.0, (-ad - cd) / 2.0)},
             {Complex(ad - cd, ad + cd), Complex(-bd, 0)}}};
}

Mat4i quartic_rational(std::int64_t a, std::int64_t b, std::int64_t c) {
    return {{{a + b + c, -2 * c, 0, 2 * a + 2 * c},
             {a, -a - b - c, -a - c, 0},
             {0, 2 * b, a + b + c, 2 * a},
             {-b, 0, -c, -a - b - c}}};
}

Mat4q windmill_rational(std::int64_t a, std::int64_t b, std::int64_t c) {
    Mat4q r{};
    const Rational ar(a), br(b), cr(c);
    r[0] = {ar, Rational(0), (cr - br) / 2, -br};
    r[1] = {Rational(0), ar, -br, -(br + cr) / 2};
    r[2] = {-br - cr, 2 * br, -ar, Rational(0)};
    r[3] = {2 * br, cr - br, Rational(0), -ar};
    return r;
}

Mat4q half_generator(const Mat4q& rational, std::int64_t D) {
    Mat4q out;
    const bool odd = ((D % 4) + 4) % 4 == 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational v = rational[i][j];
            if (odd && i == j) v += 1;
            out[i][j] = v / 2;
        }
    return out;
}

namespace {

Mat2c half_generator_analytic(const Mat2c& analytic, std::int64_t D) {
    Mat2c out;
    const bool odd = ((D % 4) + 4) % 4 == 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex v = analytic[i][j];
            if (odd && i == j) v += 1.0;
            out[i][j] = v / 2.0;
        }
    return out;
}

RepresentationPair finish_pair(Mat2c analytic, Mat4q rational, Family fam, std::int64_t a,
                               std::int64_t b, std::int64_t c, std::int64_t D) {
    RepresentationPair rep;
    rep.analytic = analytic;
    rep.rational = std::move(rational);
    rep.generator_analytic = half_generator_analytic(analytic, D);
    rep.generator = half_generator(rep.rational, D);
    rep.family = fam;
    rep.source = {a, b, c, fam == Family::quartic ? FormKind::order2 : FormKind::order3, D};
    return rep;
}

}  // namespace

RepresentationPair quartic_representation(std::int64_t a, std::int64_t b, std::int64_t c,
                                          std::int64_t D) {
    if (a * a + b * b + c * c != D)
        throw FormViolation("a^2+b^2+c^2 = " + std::to_string(a * a + b * b + c * c) +
                            " != " + std::to_string(D));
    return finish_pair(quartic_analytic(a, b, c), to_rational(quartic_rational(a, b, c)),
                       Family::quartic, a, b, c, D);
}

RepresentationPair windmill_representation(std::int64_t a, std::int64_t b, std::int64_t c,
                                           std::int64_t D) {
    if (2 * a * a - 3 * b * b - c * c != 2 * D)
        throw FormViolation("2a^2-3b^2-c^2 = " + std::to_string(2 * a * a - 3 * b * b - c * c) +
                            " != " + std::to_string(2 * D));
    const double s = std::sqrt(static_cast<double>(D));
    const Mat2c analytic = {{{Complex(s, 0), Complex(0, 0)}, {Complex(0, 0), Complex(-s, 0)}}};
    return finish_pair(analytic, windmill_rational(a, b, c), Family::windmill, a, b, c, D);
}

bool is_integral(const Mat4q& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (denominator(m[i][j]) != 1) return false;
    return true;
}

bool rosati_self_adjoint(const Mat4q& R, const Mat4i& E) {
    const Mat4q e = to_rational(E);
    const Mat4q lhs = mat_mul(mat_inverse(e), mat_mul(mat_transpose(R), e));
    return lhs == R;
}

bool squares_to_scalar(const Mat4q& R, const Rational& s) {
    const Mat4q sq = mat_mul(R, R);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (sq[i][j] != (i == j ? s : Rational(0))) return false;
    return true;
}

double endomorphism_residual(const RepresentationPair& rep, const PeriodData& pd) {
    const auto r = to_double(rep.rational);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex lhs = rep.analytic[i][0] * pd.pi[0][j] + rep.analytic[i][1] * pd.pi[1][j];
            Complex rhs(0, 0);
            for (int k = 0; k < 4; ++k) rhs += pd.pi[i][k] * r[k][j];
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    return worst;
}

RiemannReport riemann_relations(const PeriodData& pd) {
    const auto einv = to_double(mat_inverse(to_rational(pd.intersection)));

    // tmp = Pi * E^{-1}  (2x4)
    Mat24c tmp{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex s(0, 0);
            for (int k = 0; k < 4; ++k) s += pd.pi[i][k] * einv[k][j];
            tmp[i][j] = s;
        }

    double first = 0.0;      // max |(Pi E^{-1} Pi^T)_ij|
    Mat2c herm{};            // i * Pi E^{-1} Pi^H
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex sym(0, 0), h(0, 0);
            for (int k = 0; k < 4; ++k) {
                sym += tmp[i][k] * pd.pi[j][k];
                h += tmp[i][k] * std::conj(pd.pi[j][k]);
            }
            first = std::max(first, std::abs(sym));
            herm[i][j] = Complex(0, 1) * h;
        }

    // clean the Hermitian part numerically
    const double h11 = herm[0][0].real();
    const double h22 = herm[1][1].real();
    const Complex h12 = (herm[0][1] + std::conj(herm[1][0])) / 2.0;
    const double tr = h11 + h22;
    const double det = h11 * h22 - std::norm(h12);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double lam1 = (tr - disc) / 2.0;
    const double lam2 = (tr + disc) / 2.0;

    RiemannReport rep;
    const bool first_ok = first < 1e-10;
    if (lam1 > 0)
        rep.hermitian_min_eigenvalue = lam1;  // positive definite
    else if (lam2 < 0)
        rep.hermitian_min_eigenvalue = -lam2;  // negative definite: -H is positive
    else
        rep.hermitian_min_eigenvalue = -std::min(std::abs(lam1), std::abs(lam2));
    rep.holds = first_ok && rep.hermitian_min_eigenvalue > 0;
    return rep;
}

}  // namespace wd4
