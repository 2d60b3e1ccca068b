// wd4: counting, topology, point export and verification for the orbifold
// points of Prym-Teichmueller curves indexed by real quadratic
// discriminants.
//
// Exit codes: 0 success, 1 domain error (invalid discriminant or usage),
// 2 data error (missing fixtures, divisibility breach), 3 verification
// failure (table check mismatch or verify breach).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wd4/discriminant.hpp"
#include "wd4/errors.hpp"
#include "wd4/forms.hpp"
#include "wd4/geometry.hpp"
#include "wd4/parallel.hpp"
#include "wd4/periods.hpp"
#include "wd4/render.hpp"
#include "wd4/topology.hpp"

namespace {

using nlohmann::json;
using namespace wd4;

void warn_if_empty(const Discriminant& d) {
    if (d.wd_empty)
        std::cerr << "warning: D = " << d.value
                  << " is 5 mod 8, so the curve is empty; every count is zero\n";
}

json counts_json(const Discriminant& d, const OrbifoldCounts& c) {
    json j;
    j["D"] = d.value;
    j["e"]["2"] = c.e2;
    j["e"]["3"] = c.e3;
    j["e"]["4"] = c.e4;
    j["e"]["6"] = c.e6;
    j["h2_size"] = c.h2_size;
    j["h3_size"] = c.h3_size;
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw FixtureFormat("cannot open output file " + path);
    out << text;
}

std::vector<Discriminant> discriminant_range(std::int64_t lo, std::int64_t hi) {
    std::vector<Discriminant> ds;
    for (std::int64_t n = std::max<std::int64_t>(lo, 5); n <= hi; ++n) {
        const int m4 = static_cast<int>(n % 4);
        if (m4 == 2 || m4 == 3 || is_square(n)) continue;
        ds.push_back(validate(n));
    }
    return ds;
}

// All integer points on 2a^2 - 3b^2 - c^2 = 2D with a in the enumeration
// window, both signs of b and c; used by the full-depth domain sweep.
std::vector<Triple> quadric_sweep(std::int64_t D) {
    std::vector<Triple> out;
    for (std::int64_t a = -(isqrt(9 * D) + 1); a <= -1; ++a) {
        const std::int64_t t = 2 * a * a - 2 * D;
        if (t < 0) continue;
        const std::int64_t bmax = isqrt(t / 3);
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
            const std::int64_t u = t - 3 * b * b;
            const std::int64_t k = isqrt(u);
            if (k * k != u) continue;
            out.push_back({a, b, -k, FormKind::order3, D});
            if (k != 0) out.push_back({a, b, k, FormKind::order3, D});
        }
    }
    return out;
}

double eigen_pairing_error(const Mat2c& A, std::complex<double> w, double lambda) {
    const std::complex<double> r0 = A[0][0] * w + A[0][1] - lambda * w;
    const std::complex<double> r1 = A[1][0] * w + A[1][1] - lambda;
    return std::max(std::abs(r0), std::abs(r1));
}

struct VerifyResult {
    bool ok = true;
    std::string line;
};

// One discriminant's verification bundle. Fast depth checks the enumerated
// solution sets and their endomorphism certificates; full depth adds the
// domain-predicate sweep, distinctness of the mapped points, and the
// conductor-scaling exclusion law.
VerifyResult verify_one(const Discriminant& d, bool full) {
    std::vector<std::string> problems;
    const auto note = [&](const std::string& p) { problems.push_back(p); };

    const std::vector<Triple> h2 = enumerate_order2(d);
    const std::vector<Triple> h3 = enumerate_order3(d);

    if (!std::is_sorted(h2.begin(), h2.end())) note("order-2 set not sorted");
    if (!std::is_sorted(h3.begin(), h3.end())) note("order-3 set not sorted");
    if (std::adjacent_find(h2.begin(), h2.end()) != h2.end()) note("order-2 duplicates");
    if (std::adjacent_find(h3.begin(), h3.end()) != h3.end()) note("order-3 duplicates");

    // closure of the order-2 set under coordinate permutations and sign flips
    {
        std::set<std::array<std::int64_t, 3>> s;
        for (const Triple& t : h2) s.insert({t.a, t.b, t.c});
        const auto closed = [&s, &h2] {
            for (const Triple& t : h2) {
                std::array<std::int64_t, 3> v = {t.a, t.b, t.c};
                std::sort(v.begin(), v.end());
                do {
                    for (int mask = 0; mask < 8; ++mask) {
                        const std::array<std::int64_t, 3> img = {mask & 1 ? -v[0] : v[0],
                                                                 mask & 2 ? -v[1] : v[1],
                                                                 mask & 4 ? -v[2] : v[2]};
                        if (!s.count(img)) return false;
                    }
                } while (std::next_permutation(v.begin(), v.end()));
            }
            return true;
        };
        if (!closed()) note("order-2 set not closed under signed permutations");
    }

    for (const Triple& t : h3) {
        const bool ok = d.value % 4 == 0
                            ? (t.a % 2 == 0 && t.b % 2 == 0 && t.c % 2 == 0)
                            : (t.a % 2 != 0 && t.b % 2 == 0 && t.c % 2 == 0);
        if (!ok) {
            note("parity violated by (" + std::to_string(t.a) + "," + std::to_string(t.b) +
                 "," + std::to_string(t.c) + ")");
            break;
        }
    }

    const OrbifoldCounts counts = orbifold_counts(d, h2, h3);
    if (counts.h2_size != h2.size() || counts.h3_size != h3.size() ||
        counts.e3 != static_cast<std::int64_t>(h3.size()))
        note("count record disagrees with the enumerated sets");
    if (d.value % 4 == 0 && d.value > 12 &&
        counts.e2 * 24 != static_cast<std::int64_t>(h2.size()))
        note("e2 is not |order-2 set| / 24");

    const PeriodData quartic_pd = quartic_periods();
    const Mat4i windmill_e = windmill_periods(std::complex<double>(0, 0)).intersection;
    const double sqrt_d = std::sqrt(static_cast<double>(d.value));
    std::size_t certificates = 0;

    for (const Triple& t : h2) {
        const RepresentationPair rep = quartic_representation(t.a, t.b, t.c, d.value);
        if (!squares_to_scalar(rep.rational, Rational(d.value))) note("R^2 != D (order 2)");
        if (!rosati_self_adjoint(rep.rational, quartic_pd.intersection))
            note("Rosati adjointness fails (order 2)");
        if (endomorphism_residual(rep, quartic_pd) >= 1e-10)
            note("endomorphism residual breach (order 2)");
        if (d.value % 4 == 0 && !is_integral(rep.generator))
            note("half generator not integral (order 2)");
        const auto [wp, wm] = order2_eigenform_coords(t);
        const double scale = sqrt_d * (1.0 + std::max(std::abs(wp), std::abs(wm)));
        if (eigen_pairing_error(rep.analytic, wp, -sqrt_d) > 1e-9 * scale ||
            eigen_pairing_error(rep.analytic, wm, sqrt_d) > 1e-9 * scale)
            note("eigenvector pairing fails (order 2)");
        ++certificates;
        if (!problems.empty()) break;
    }

    for (const Triple& t : h3) {
        const RepresentationPair rep = windmill_representation(t.a, t.b, t.c, d.value);
        const PeriodData pd = windmill_periods(f_map(t).shadow);
        if (!squares_to_scalar(rep.rational, Rational(d.value))) note("R^2 != D (order 3)");
        if (!rosati_self_adjoint(rep.rational, windmill_e))
            note("Rosati adjointness fails (order 3)");
        if (endomorphism_residual(rep, pd) >= 1e-10)
            note("endomorphism residual breach (order 3)");
        if (!is_integral(rep.generator)) note("half generator not integral (order 3)");
        const RiemannReport rr = riemann_relations(pd);
        if (!rr.holds || rr.hermitian_min_eigenvalue <= 0)
            note("Riemann relations fail (order 3)");
        ++certificates;
        if (!problems.empty()) break;
    }

    std::size_t sweep_size = 0;
    if (full && problems.empty()) {
        const std::vector<Triple> sweep = quadric_sweep(d.value);
        sweep_size = sweep.size();
        for (const Triple& t : sweep)
            if (in_fundamental_domain_exact(t) != in_fundamental_domain_geometric(f_map(t))) {
                note("domain predicates disagree on (" + std::to_string(t.a) + "," +
                     std::to_string(t.b) + "," + std::to_string(t.c) + ")");
                break;
            }

        std::vector<ExactDiscPoint> pts;
        pts.reserve(h3.size());
        for (const Triple& t : h3) pts.push_back(f_map(t));
        for (std::size_t i = 0; i < pts.size() && problems.empty(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) {
                    note("two triples map to the same point");
                    break;
                }

        if (d.conductor > 1 && problems.empty()) {
            std::set<std::array<std::int64_t, 3>> all, kept, multiples;
            for (const Triple& t : enumerate_order3_all(d)) all.insert({t.a, t.b, t.c});
            for (const Triple& t : h3) kept.insert({t.a, t.b, t.c});
            std::int64_t f = d.conductor;
            for (std::int64_t p = 2; p <= f; ++p) {
                if (f % p != 0) continue;
                while (f % p == 0) f /= p;
                for (const Triple& t : enumerate_order3_all(validate(d.value / (p * p))))
                    multiples.insert({p * t.a, p * t.b, p * t.c});
            }
            std::set<std::array<std::int64_t, 3>> excluded;
            for (const auto& v : all)
                if (!kept.count(v)) excluded.insert(v);
            if (excluded != multiples) note("conductor-scaling exclusion law fails");
        }
    }

    VerifyResult res;
    std::ostringstream os;
    if (problems.empty()) {
        os << "D=" << d.value << " ok (h2=" << h2.size() << ", h3=" << h3.size()
           << ", certificates=" << certificates;
        if (full) os << ", sweep=" << sweep_size;
        os << ")";
    } else {
        res.ok = false;
        os << "D=" << d.value << " FAIL: " << problems.front();
    }
    res.line = os.str();
    return res;
}

int cmd_counts(std::int64_t D, const std::string& format) {
    const Discriminant d = validate(D);
    warn_if_empty(d);
    const std::vector<Triple> h2 = enumerate_order2(d);
    const std::vector<Triple> h3 = enumerate_order3(d);
    const OrbifoldCounts c = orbifold_counts(d, h2, h3);
    if (format == "json") {
        std::cout << counts_json(d, c).dump(2) << "\n";
    } else {
        std::cout << "e2=" << c.e2 << " e3=" << c.e3 << " e4=" << c.e4 << " e6=" << c.e6
                  << "\n";
    }
    return 0;
}

int cmd_triples(std::int64_t D, int order, const std::string& format) {
    const Discriminant d = validate(D);
    warn_if_empty(d);
    const std::vector<Triple> h2 = enumerate_order2(d);
    const std::vector<Triple> h3 = enumerate_order3(d);
    const std::vector<Triple>& chosen = order == 2 ? h2 : h3;
    if (format == "json") {
        json j = counts_json(d, orbifold_counts(d, h2, h3));
        j["triples"]["order"] = order;
        json items = json::array();
        for (const Triple& t : chosen) items.push_back({t.a, t.b, t.c});
        j["triples"]["items"] = items;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "a,b,c\n";
        for (const Triple& t : chosen)
            std::cout << t.a << "," << t.b << "," << t.c << "\n";
    } else {
        for (const Triple& t : chosen)
            std::cout << t.a << " " << t.b << " " << t.c << "\n";
    }
    return 0;
}

int cmd_conductor(std::int64_t D) {
    const Discriminant d = validate(D);
    std::cout << "D=" << d.value << " conductor=" << d.conductor
              << " fundamental=" << d.fundamental_part << "\n";
    return 0;
}

int cmd_table(std::int64_t dmin, std::int64_t dmax, const std::string& fixtures_path,
              const std::string& expected_path, bool check, unsigned workers) {
    const FixtureMap fixtures = load_fixtures(fixtures_path);
    if (check) {
        const ExpectedMap expected = load_expected(expected_path);
        const std::vector<CheckRow> rows = check_table(dmin, dmax, fixtures, expected, workers);
        std::size_t mismatches = 0;
        for (const CheckRow& r : rows) {
            if (r.match) {
                std::cout << "D=" << r.D << " MATCH\n";
            } else {
                ++mismatches;
                std::cout << "D=" << r.D << " MISMATCH " << r.detail << "\n";
            }
        }
        std::cout << rows.size() << " rows checked, " << mismatches << " mismatches\n";
        return mismatches == 0 ? 0 : 3;
    }
    const std::vector<CurveTopology> rows = build_table(dmin, dmax, fixtures, workers);
    for (const CurveTopology& r : rows)
        std::cout << "D=" << r.D << " e2=" << r.e2 << " e3=" << r.e3 << " e4=" << r.e4
                  << " e6=" << r.e6 << " genus=" << r.genus << " chi=" << r.chi.str()
                  << " cusps=" << r.cusps << " components=" << r.components << "\n";
    return 0;
}

int cmd_points(std::int64_t D, int order, const std::string& csv_path,
               const std::string& svg_path) {
    const Discriminant d = validate(D);
    warn_if_empty(d);
    const PlotSpec spec = order == 2 ? order2_plot(d) : order3_plot(d);
    if (csv_path.empty() && svg_path.empty()) {
        std::cout << render_svg(spec);
        return 0;
    }
    if (!csv_path.empty()) write_output(csv_path, export_csv(spec));
    if (!svg_path.empty()) write_output(svg_path, render_svg(spec));
    return 0;
}

int cmd_verify(std::int64_t D, bool has_d, std::int64_t dmin, std::int64_t dmax,
               const std::string& depth, unsigned workers) {
    const bool full = depth == "full";
    std::vector<Discriminant> ds;
    if (has_d)
        ds.push_back(validate(D));
    else
        ds = discriminant_range(dmin, dmax);

    std::vector<VerifyResult> results(ds.size());
    parallel_for(ds.size(), workers, [&](std::size_t i) { results[i] = verify_one(ds[i], full); });

    bool all_ok = true;
    for (const VerifyResult& r : results) {
        std::cout << r.line << "\n";
        all_ok = all_ok && r.ok;
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbifold point counts, curve topology and endomorphism certificates "
                 "for real quadratic discriminants"};
    app.require_subcommand(1);

    std::int64_t D = 0;
    int order = 3;
    std::string format = "text";
    std::int64_t dmin = 0, dmax = 0;
    std::string fixtures_path = "data/invariants.csv";
    std::string expected_path = "data/expected_topology.csv";
    bool check = false;
    unsigned workers = default_workers();
    std::string csv_path, svg_path;
    std::string depth = "fast";

    CLI::App* counts = app.add_subcommand("counts", "orbifold point counts for one discriminant");
    counts->add_option("D", D, "discriminant")->required();
    counts->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* triples = app.add_subcommand("triples", "solution triples behind the counts");
    triples->add_option("D", D, "discriminant")->required();
    triples->add_option("--order", order, "orbifold point order, 2 or 3")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    triples->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* conductor = app.add_subcommand("conductor", "conductor decomposition of D");
    conductor->add_option("D", D, "discriminant")->required();

    CLI::App* table = app.add_subcommand("table", "topology table over a discriminant range");
    table->add_option("--min", dmin, "lower end of the range")->required();
    table->add_option("--max", dmax, "upper end of the range")->required();
    table->add_option("--fixtures", fixtures_path, "invariant fixture CSV")
        ->envname("WD4_FIXTURES");
    table->add_option("--expected", expected_path, "expected-values CSV for --check")
        ->envname("WD4_EXPECTED");
    table->add_flag("--check", check, "compare against the expected values");
    table->add_option("--workers", workers, "worker thread cap");

    CLI::App* points = app.add_subcommand("points", "export orbifold points as SVG or CSV");
    points->add_option("D", D, "discriminant")->required();
    points->add_option("--order", order, "orbifold point order, 2 or 3")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    points->add_option("--csv", csv_path, "CSV output path, - for stdout");
    points->add_option("--svg", svg_path, "SVG output path, - for stdout");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    CLI::Option* verify_d = verify->add_option("D", D, "single discriminant");
    verify->add_option("--min", dmin, "lower end of a range")->excludes(verify_d);
    verify->add_option("--max", dmax, "upper end of a range")->excludes(verify_d);
    verify->add_option("--depth", depth, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--workers", workers, "worker thread cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(counts)) return cmd_counts(D, format);
        if (app.got_subcommand(triples)) return cmd_triples(D, order, format);
        if (app.got_subcommand(conductor)) return cmd_conductor(D);
        if (app.got_subcommand(table))
            return cmd_table(dmin, dmax, fixtures_path, expected_path, check, workers);
        if (app.got_subcommand(points)) return cmd_points(D, order, csv_path, svg_path);
        if (app.got_subcommand(verify)) {
            const bool has_d = verify_d->count() > 0;
            if (!has_d && verify->count("--min") + verify->count("--max") < 2) {
                std::cerr << "error: verify needs either D or both --min and --max\n";
                return 1;
            }
            return cmd_verify(D, has_d, dmin, dmax, depth, workers);
        }
    } catch (const wd4::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    }
    return 0;
}
