#include "wd4/topology.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wd4/parallel.hpp"

namespace wd4 {

namespace {

std::int64_t split_count(std::int64_t whole, int components, std::int64_t D, const char* name) {
    if (whole % components != 0)
        throw NonIntegralComponentSplit("D=" + std::to_string(D) + ": " + name + "=" +
                                        std::to_string(whole) + " not divisible by " +
                                        std::to_string(components) + " components");
    return whole / components;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size() || s.empty()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FixtureFormat(where + ": not an integer: '" + s + "'");
    }
}

}  // namespace

CurveTopology genus_from_invariants(const InvariantFixture& fix, const OrbifoldCounts& counts) {
    const Discriminant d = validate(fix.D);
    if (d.wd_empty)
        throw EmptyCurve("D=" + std::to_string(fix.D) + " is 5 mod 8: the curve is empty");
    if (fix.components < 1 || fix.components > 2)
        throw FixtureFormat("D=" + std::to_string(fix.D) + ": components must be 1 or 2");

    CurveTopology t;
    t.D = fix.D;
    t.chi = fix.chi;
    t.cusps = fix.cusps;
    t.components = fix.components;
    t.e2 = split_count(counts.e2, fix.components, fix.D, "e2");
    t.e3 = split_count(counts.e3, fix.components, fix.D, "e3");
    t.e4 = split_count(counts.e4, fix.components, fix.D, "e4");
    t.e6 = split_count(counts.e6, fix.components, fix.D, "e6");

    // 2 - 2g = chi + C + e2/2 + 2 e3/3 + 3 e4/4 + 5 e6/6 on one component
    Rational rhs = fix.chi + fix.cusps;
    rhs += Rational(t.e2, 2) + Rational(2 * t.e3, 3) + Rational(3 * t.e4, 4) + Rational(5 * t.e6, 6);
    const Rational genus = (Rational(2) - rhs) / 2;
    if (denominator(genus) != 1 || genus < 0)
        throw NonIntegralGenus("D=" + std::to_string(fix.D) +
                               ": identity solves to genus = " + genus.str());
    t.genus = numerator(genus).convert_to<std::int64_t>();
    return t;
}

FixtureMap parse_fixtures(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{
            "D", "chi_num", "chi_den", "cusps", "components"})
        throw FixtureFormat(name + ": expected header D,chi_num,chi_den,cusps,components");
    FixtureMap out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        const std::string where = name + ":" + std::to_string(lineno);
        if (fields.size() != 5) throw FixtureFormat(where + ": expected 5 fields");
        InvariantFixture fix;
        fix.D = parse_int(fields[0], where);
        const std::int64_t num = parse_int(fields[1], where);
        const std::int64_t den = parse_int(fields[2], where);
        if (den <= 0) throw FixtureFormat(where + ": chi_den must be positive");
        if (std::gcd(num, den) != 1) throw FixtureFormat(where + ": chi not in lowest terms");
        fix.chi = Rational(num, den);
        fix.cusps = parse_int(fields[3], where);
        fix.components = static_cast<int>(parse_int(fields[4], where));
        if (fix.components != 1 && fix.components != 2)
            throw FixtureFormat(where + ": components must be 1 or 2");
        try {
            (void)validate(fix.D);
        } catch (const Error& e) {
            throw FixtureFormat(where + ": " + e.what());
        }
        if (!out.emplace(fix.D, fix).second)
            throw FixtureFormat(where + ": duplicate D=" + std::to_string(fix.D));
    }
    return out;
}

FixtureMap load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingFixture("cannot open fixture file " + path);
    return parse_fixtures(in, path);
}

ExpectedMap parse_expected(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) != std::vector<std::string>{"D", "e2", "e3", "genus"})
        throw FixtureFormat(name + ": expected header D,e2,e3,genus");
    ExpectedMap out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        const std::string where = name + ":" + std::to_string(lineno);
        if (fields.size() != 4) throw FixtureFormat(where + ": expected 4 fields");
        ExpectedRow row;
        row.D = parse_int(fields[0], where);
        row.e2 = parse_int(fields[1], where);
        row.e3 = parse_int(fields[2], where);
        row.genus = parse_int(fields[3], where);
        if (!out.emplace(row.D, row).second)
            throw FixtureFormat(where + ": duplicate D=" + std::to_string(row.D));
    }
    return out;
}

ExpectedMap load_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingFixture("cannot open expected-values file " + path);
    return parse_expected(in, path);
}

namespace {

// Valid, non-empty discriminants in [dmin, dmax].
std::vector<Discriminant> curve_range(std::int64_t dmin, std::int64_t dmax) {
    std::vector<Discriminant> ds;
    for (std::int64_t n = std::max<std::int64_t>(dmin, 2); n <= dmax; ++n) {
        const int m4 = static_cast<int>(n % 4);
        if (m4 == 2 || m4 == 3) continue;
        if (is_square(n)) continue;
        const Discriminant d = validate(n);
        if (d.wd_empty) continue;
        ds.push_back(d);
    }
    return ds;
}

}  // namespace

std::vector<CurveTopology> build_table(std::int64_t dmin, std::int64_t dmax,
                                       const FixtureMap& fixtures, unsigned workers) {
    const std::vector<Discriminant> ds = curve_range(dmin, dmax);
    std::string missing;
    for (const Discriminant& d : ds)
        if (!fixtures.count(d.value)) missing += (missing.empty() ? "" : ", ") + std::to_string(d.value);
    if (!missing.empty()) throw MissingFixture("no invariant data for D = " + missing);

    std::vector<CurveTopology> rows(ds.size());
    parallel_for(ds.size(), workers, [&](std::size_t i) {
        rows[i] = genus_from_invariants(fixtures.at(ds[i].value), orbifold_counts(ds[i]));
    });
    return rows;
}

std::vector<CheckRow> check_table(std::int64_t dmin, std::int64_t dmax, const FixtureMap& fixtures,
                                  const ExpectedMap& expected, unsigned workers) {
    std::vector<const InvariantFixture*> rows;
    for (const auto& [D, fix] : fixtures)
        if (D >= dmin && D <= dmax) rows.push_back(&fix);

    std::vector<CheckRow> out(rows.size());
    parallel_for(rows.size(), workers, [&](std::size_t i) {
        const InvariantFixture& fix = *rows[i];
        CheckRow& res = out[i];
        res.D = fix.D;
        const auto it = expected.find(fix.D);
        if (it == expected.end()) {
            res.detail = "no expected row";
            return;
        }
        try {
            const CurveTopology t = genus_from_invariants(fix, orbifold_counts(validate(fix.D)));
            const ExpectedRow& want = it->second;
            if (t.e2 != want.e2 || t.e3 != want.e3 || t.genus != want.genus) {
                std::ostringstream os;
                os << "computed e2=" << t.e2 << " e3=" << t.e3 << " genus=" << t.genus
                   << ", expected e2=" << want.e2 << " e3=" << want.e3 << " genus=" << want.genus;
                res.detail = os.str();
            } else {
                res.match = true;
            }
        } catch (const Error& e) {
            res.detail = e.what();
        }
    });
    return out;
}

}  // namespace wd4
