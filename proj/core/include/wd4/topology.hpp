#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wd4/forms.hpp"
#include "wd4/quadratic.hpp"

namespace wd4 {

// Euler characteristic and cusp count for one curve. For two-component
// curves (D = 1 mod 8) the values are per component, matching the published
// convention.
struct InvariantFixture {
    std::int64_t D = 0;
    Rational chi;
    std::int64_t cusps = 0;
    int components = 1;
};

struct CurveTopology {
    std::int64_t D = 0;
    Rational chi;             // per component
    std::int64_t cusps = 0;   // per component
    int components = 1;
    std::int64_t e2 = 0, e3 = 0, e4 = 0, e6 = 0;  // per component
    std::int64_t genus = 0;                       // per component
};

// Solves 2 - 2g = chi + C + sum_d e_d (1 - 1/d) on one component.
// Whole-curve counts are split across components first.
// Throws EmptyCurve / NonIntegralComponentSplit / NonIntegralGenus.
CurveTopology genus_from_invariants(const InvariantFixture& fix, const OrbifoldCounts& counts);

using FixtureMap = std::map<std::int64_t, InvariantFixture>;

// CSV with exact header "D,chi_num,chi_den,cusps,components"; chi in lowest
// terms, chi_den > 0, one row per discriminant. Throws FixtureFormat.
FixtureMap parse_fixtures(std::istream& in, const std::string& name);
FixtureMap load_fixtures(const std::string& path);

// One record per valid non-empty discriminant in [dmin, dmax]. Discriminants
// lacking fixture data raise MissingFixture. Rows computed in parallel on up
// to `workers` threads, emitted in increasing D.
std::vector<CurveTopology> build_table(std::int64_t dmin, std::int64_t dmax,
                                       const FixtureMap& fixtures, unsigned workers = 1);

// Reference values to compare a computed table against.
struct ExpectedRow {
    std::int64_t D = 0, e2 = 0, e3 = 0, genus = 0;  // per component
};
using ExpectedMap = std::map<std::int64_t, ExpectedRow>;

// CSV with exact header "D,e2,e3,genus". Throws FixtureFormat.
ExpectedMap parse_expected(std::istream& in, const std::string& name);
ExpectedMap load_expected(const std::string& path);

struct CheckRow {
    std::int64_t D = 0;
    bool match = false;
    std::string detail;  // non-empty on mismatch or computation error
};

// Recomputes every fixture row with D in [dmin, dmax] and compares
// (e2, e3, genus) per component against the expected values. The fixture
// defines the row set; a fixture row without an expected counterpart and any
// per-row computation error count as mismatches.
std::vector<CheckRow> check_table(std::int64_t dmin, std::int64_t dmax,
                                  const FixtureMap& fixtures, const ExpectedMap& expected,
                                  unsigned workers = 1);

}  // namespace wd4
