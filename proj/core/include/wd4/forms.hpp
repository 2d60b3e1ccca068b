#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wd4/discriminant.hpp"

namespace wd4 {

enum class FormKind { order2, order3 };

struct Triple {
    std::int64_t a = 0, b = 0, c = 0;
    FormKind kind = FormKind::order2;
    std::int64_t discriminant = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct OrbifoldCounts {
    std::int64_t e2 = 0, e3 = 0, e4 = 0, e6 = 0;
    std::size_t h2_size = 0, h3_size = 0;
};

// Solutions of a^2 + b^2 + c^2 = D that give a proper order-2 point:
// content exactly 2 when D = 0 mod 4, primitive when D = 1 mod 4.
// Sorted lexicographically in (a, b, c).
std::vector<Triple> enumerate_order2(const Discriminant& d);

// The same without the properness filter.
std::vector<Triple> enumerate_order2_all(const Discriminant& d);

// Solutions of 2a^2 - 3b^2 - c^2 = 2D inside the order-3 counting domain:
//   D < a^2 < 9D with a < 0,  c < b <= 0,
//   4a - 3b - 3c < 0, or = 0 together with c < 3b (kept half of the arc),
//   gcd(a, b, c, conductor) = 1.
// Sorted lexicographically in (a, b, c).
std::vector<Triple> enumerate_order3(const Discriminant& d);

// The same without the gcd(., conductor) filter (the bare domain conditions).
std::vector<Triple> enumerate_order3_all(const Discriminant& d);

// Orbifold point counts:
//   e2 = |order-2 set| / 24 for D = 0 mod 4, D > 12; 0 otherwise
//   e3 = |order-3 set|
//   e4 = 1 iff D = 8, e6 = 1 iff D = 12
// Throws DivisibilityViolation if the division by 24 leaves a remainder.
OrbifoldCounts orbifold_counts(const Discriminant& d);

// Same, reusing already-enumerated solution sets (callers that need both the
// triples and the counts enumerate once).
OrbifoldCounts orbifold_counts(const Discriminant& d,
                               const std::vector<Triple>& order2_triples,
                               const std::vector<Triple>& order3_triples);

}  // namespace wd4
