#include "wd4/quadratic.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace wd4 {

std::int64_t square_part(std::int64_t n) {
    assert(n > 0);
    std::int64_t s = 1;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
    }
    return s;
}

QuadraticNumber::QuadraticNumber(Rational p) : p_(std::move(p)) {}

QuadraticNumber::QuadraticNumber(Rational p, Rational q, std::int64_t radicand)
    : p_(std::move(p)), q_(std::move(q)), m_(radicand) {
    assert(m_ >= 1);
    if (q_ == 0) {
        m_ = 1;
        return;
    }
    const std::int64_t s = square_part(m_);
    if (s > 1) {
        q_ *= s;
        m_ /= s * s;
    }
    if (m_ == 1) {
        p_ += q_;
        q_ = 0;
    }
}

int QuadraticNumber::sign() const {
    const int sp = p_.sign();
    const int sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // p and q*sqrt(m) pull in opposite directions: compare p^2 with q^2 m
    const Rational lhs = p_ * p_;
    const Rational rhs = q_ * q_ * m_;
    if (lhs == rhs) return 0;  // unreachable for squarefree m > 1
    return lhs > rhs ? sp : sq;
}

double QuadraticNumber::to_double() const {
    double v = p_.convert_to<double>();
    if (q_ != 0) v += q_.convert_to<double>() * std::sqrt(static_cast<double>(m_));
    return v;
}

std::string QuadraticNumber::str() const {
    std::ostringstream os;
    os << p_;
    if (q_ != 0) os << " + " << q_ << "*sqrt(" << m_ << ")";
    return os.str();
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber r;
    r.p_ = -p_;
    r.q_ = -q_;
    r.m_ = m_;
    return r;
}

namespace {

std::int64_t common_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.radicand() == 1) return b.radicand();
    if (b.radicand() == 1) return a.radicand();
    assert(a.radicand() == b.radicand() && "mixed quadratic fields");
    return a.radicand();
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.rational_part() + b.rational_part(), a.radical_part() + b.radical_part(),
            common_radicand(a, b)};
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.rational_part() - b.rational_part(), a.radical_part() - b.radical_part(),
            common_radicand(a, b)};
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    const std::int64_t m = common_radicand(a, b);
    return {a.rational_part() * b.rational_part() + a.radical_part() * b.radical_part() * m,
            a.rational_part() * b.radical_part() + a.radical_part() * b.rational_part(), m};
}

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.rational_part() == b.rational_part() && a.radical_part() == b.radical_part() &&
           (a.radical_part() == 0 || a.radicand() == b.radicand());
}

}  // namespace wd4
