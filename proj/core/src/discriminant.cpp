#include "wd4/discriminant.hpp"

#include <bit>
#include <string>

namespace wd4 {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw DomainError("isqrt of negative value");
    if (n < 2) return n;
    const auto width = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n)));
    std::int64_t x = std::int64_t{1} << ((width + 1) / 2);
    for (;;) {
        const std::int64_t y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

bool is_square(std::int64_t n) {
    if (n < 0) return false;
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

Discriminant validate(std::int64_t n) {
    if (n <= 1) throw NotADiscriminant("discriminant must exceed 1, got " + std::to_string(n));
    const int m4 = static_cast<int>(n % 4);
    if (m4 == 2 || m4 == 3)
        throw NotADiscriminant(std::to_string(n) + " is " + std::to_string(m4) + " mod 4");
    if (is_square(n)) throw SquareDiscriminant(std::to_string(n) + " is a perfect square");

    // conductor = product of p^floor(e_p/2) over the factorisation, with the
    // exponent of 2 lowered by one if the quotient lands in 2 or 3 mod 4
    std::int64_t f = 1;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
    }
    const int q4 = static_cast<int>((n / (f * f)) % 4);
    if (q4 == 2 || q4 == 3) f /= 2;

    Discriminant d;
    d.value = n;
    d.conductor = f;
    d.fundamental_part = n / (f * f);
    d.residue_mod8 = static_cast<int>(n % 8);
    d.wd_empty = d.residue_mod8 == 5;
    return d;
}

std::pair<std::int64_t, std::int64_t> isqrt_bounds(const Discriminant& d) {
    return {isqrt(d.value), isqrt(9 * d.value)};
}

}  // namespace wd4
