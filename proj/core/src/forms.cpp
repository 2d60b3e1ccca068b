#include "wd4/forms.hpp"

#include <numeric>
#include <string>

namespace wd4 {

namespace {

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(a, b), c);  // gcd(0,0,x) = |x|
}

}  // namespace

std::vector<Triple> enumerate_order2_all(const Discriminant& d) {
    const std::int64_t D = d.value;
    std::vector<Triple> out;
    const std::int64_t r = isqrt(D);
    for (std::int64_t a = -r; a <= r; ++a) {
        const std::int64_t s = isqrt(D - a * a);
        for (std::int64_t b = -s; b <= s; ++b) {
            const std::int64_t rem = D - a * a - b * b;
            const std::int64_t k = isqrt(rem);
            if (k * k != rem) continue;
            if (k == 0) {
                out.push_back({a, b, 0, FormKind::order2, D});
            } else {
                out.push_back({a, b, -k, FormKind::order2, D});
                out.push_back({a, b, k, FormKind::order2, D});
            }
        }
    }
    return out;
}

std::vector<Triple> enumerate_order2(const Discriminant& d) {
    // Proper order-2 data: the order generated inside the endomorphisms is
    // the full quadratic order exactly when the content is 2 (D = 0 mod 4;
    // twice a primitive representation of D/4) or 1 (D = 1 mod 4).
    const std::int64_t want = d.value % 4 == 0 ? 2 : 1;
    std::vector<Triple> out;
    for (const Triple& t : enumerate_order2_all(d))
        if (gcd3(t.a, t.b, t.c) == want) out.push_back(t);
    return out;
}

std::vector<Triple> enumerate_order3_all(const Discriminant& d) {
    const std::int64_t D = d.value;
    std::vector<Triple> out;
    const auto [lo, hi] = isqrt_bounds(d);
    (void)lo;
    for (std::int64_t a = -hi; a * a > D; ++a) {
        const std::int64_t t = 2 * a * a - 2 * D;
        const std::int64_t bmax = isqrt(t / 3);
        for (std::int64_t b = -bmax; b <= 0; ++b) {
            const std::int64_t u = t - 3 * b * b;
            const std::int64_t k = isqrt(u);
            if (k * k != u) continue;
            const std::int64_t c = -k;
            if (!(c < b)) continue;
            const std::int64_t edge = 4 * a - 3 * b - 3 * c;
            if (edge > 0) continue;
            if (edge == 0 && !(c < 3 * b)) continue;
            out.push_back({a, b, c, FormKind::order3, D});
        }
    }
    return out;
}

std::vector<Triple> enumerate_order3(const Discriminant& d) {
    std::vector<Triple> out;
    for (const Triple& t : enumerate_order3_all(d))
        if (std::gcd(gcd3(t.a, t.b, t.c), d.conductor) == 1) out.push_back(t);
    return out;
}

OrbifoldCounts orbifold_counts(const Discriminant& d, const std::vector<Triple>& order2_triples,
                               const std::vector<Triple>& order3_triples) {
    OrbifoldCounts n;
    n.h2_size = order2_triples.size();
    n.h3_size = order3_triples.size();
    n.e4 = d.value == 8 ? 1 : 0;
    n.e6 = d.value == 12 ? 1 : 0;
    n.e3 = static_cast<std::int64_t>(n.h3_size);
    if (d.value % 4 == 0 && d.value != 8 && d.value != 12) {
        if (n.h2_size % 24 != 0)
            throw DivisibilityViolation("D=" + std::to_string(d.value) + ": order-2 count " +
                                        std::to_string(n.h2_size) + " not divisible by 24");
        n.e2 = static_cast<std::int64_t>(n.h2_size / 24);
    }
    return n;
}

OrbifoldCounts orbifold_counts(const Discriminant& d) {
    return orbifold_counts(d, enumerate_order2(d), enumerate_order3(d));
}

}  // namespace wd4
