#pragma once

#include <cstdint>
#include <utility>

#include "wd4/errors.hpp"

namespace wd4 {

// A real quadratic discriminant D > 1, D = 0 or 1 mod 4, not a perfect
// square, split as D = conductor^2 * fundamental_part. wd_empty flags the
// discriminants (D = 5 mod 8) whose curve has no points at all.
struct Discriminant {
    std::int64_t value = 0;
    std::int64_t conductor = 1;
    std::int64_t fundamental_part = 0;
    int residue_mod8 = 0;  // one of 0, 1, 4, 5
    bool wd_empty = false;
};

// Floor of sqrt(n), n >= 0. Integer Newton iteration; no floating point.
std::int64_t isqrt(std::int64_t n);

bool is_square(std::int64_t n);

// Validates n as a discriminant and computes the conductor decomposition.
// Throws NotADiscriminant / SquareDiscriminant.
Discriminant validate(std::int64_t n);

// (floor(sqrt(D)), floor(3*sqrt(D))): the enumeration bounds used by the
// form solvers. Exact integer arithmetic throughout.
std::pair<std::int64_t, std::int64_t> isqrt_bounds(const Discriminant& d);

}  // namespace wd4
