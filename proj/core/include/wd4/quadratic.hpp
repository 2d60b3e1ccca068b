#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wd4 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element p + q*sqrt(m) of a real quadratic field, m squarefree.
//
// The radicand passed to the constructor is normalised to its squarefree
// core (sqrt(s^2 * m0) folds s into q), so elements built over sqrt(12) and
// sqrt(3) compare exactly. A rational element carries radicand 1 and mixes
// freely with any field; mixing two distinct irrational radicands is a
// programming error and asserts.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational p);  // NOLINT: implicit by design
    QuadraticNumber(Rational p, Rational q, std::int64_t radicand);

    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }
    std::int64_t radicand() const { return m_; }

    bool is_rational() const { return m_ == 1; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    // -1, 0 or +1; exact (compares p^2 against q^2 m when signs differ).
    int sign() const;

    double to_double() const;
    std::string str() const;

    QuadraticNumber operator-() const;
    friend QuadraticNumber operator+(const QuadraticNumber&, const QuadraticNumber&);
    friend QuadraticNumber operator-(const QuadraticNumber&, const QuadraticNumber&);
    friend QuadraticNumber operator*(const QuadraticNumber&, const QuadraticNumber&);
    friend bool operator==(const QuadraticNumber&, const QuadraticNumber&);
    friend bool operator!=(const QuadraticNumber& a, const QuadraticNumber& b) { return !(a == b); }
    friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() >= 0; }

private:
    Rational p_{0};
    Rational q_{0};
    std::int64_t m_ = 1;
};

// Largest s with s^2 | n (n > 0), by trial division.
std::int64_t square_part(std::int64_t n);

}  // namespace wd4
