// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion holds. All comparisons are exact rational equality.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "routh/identities.hpp"
#include "routh/oracle.hpp"
#include "routh/routh.hpp"

using namespace routh;

namespace {

constexpr std::uint64_t kSeed = 20261015;
constexpr std::size_t kOracleTuples = 1000;
constexpr std::size_t kOracleBases = 20;
constexpr std::size_t kDecompositionTuples = 200;
constexpr std::size_t kBoundaryTuples = 200;
constexpr std::size_t kDualityTuples = 200;
constexpr double kEq3BudgetSeconds = 1.0;
constexpr double kEq4BudgetSeconds = 5.0;
constexpr double kOracleBudgetSeconds = 60.0;

struct Outcome {
    bool ok;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Runs body(i) for i in [0, n) across threads; returns how many returned true.
std::size_t parallel_count(std::size_t n, const std::function<bool(std::size_t)>& body) {
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::atomic<std::size_t> passed{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                if (body(i)) ++passed;
            }
        });
    }
    for (auto& t : pool) t.join();
    return passed.load();
}

std::string fraction(std::size_t passed, std::size_t total) {
    return std::to_string(passed) + "/" + std::to_string(total);
}

Outcome criterion_eq3() {
    const auto start = std::chrono::steady_clock::now();
    const IdentityReport rep = verify_identity_eq3();
    const double secs = seconds_since(start);
    return {rep.verified && secs < kEq3BudgetSeconds,
            "1 - six corners == (1-xyzt)/((1+x)(1+y)(1+z)(1+t)) symbolically, " + std::to_string(secs) + " s"};
}

Outcome criterion_eq4() {
    const auto start = std::chrono::steady_clock::now();
    const IdentityReport rep = verify_identity_eq4();
    const double secs = seconds_since(start);
    return {rep.verified && secs < kEq4BudgetSeconds,
            "1 - six cut corners == (1-xyzt)^3/(four cubics) symbolically, " + std::to_string(secs) + " s"};
}

Outcome criterion_triangle() {
    const Point2 a{0, 0}, b{1, 0}, c{0, 1};
    const TriRatios ones(1, 1, 1), twos(2, 2, 2);
    const Rational klm = routh_tri_cevian_area(ones);
    const Rational pqr = routh_tri_central_area(twos);
    const bool ok = klm == Rational::make(1, 4) && pqr == Rational::make(1, 7) &&
                    oracle::oracle_triangle_areas(a, b, c, ones).first == klm &&
                    oracle::oracle_triangle_areas(a, b, c, twos).second == pqr;
    return {ok, "area(KLM)(1,1,1) = " + klm.str() + ", area(PQR)(2,2,2) = " + pqr.str() + ", oracle agrees"};
}

Outcome criterion_tetra_values() {
    const Rational h = Rational::make(1, 2);
    const RatioTuple r(h, h, h, h);
    const Rational klmn = v_klmn_closed(r);
    const Rational pqrs = v_pqrs_closed(r);
    const auto [oracle_klmn, oracle_pqrs] = oracle::oracle_section_volumes(oracle::canonical_base(), r);
    const bool ok = klmn == Rational::make(5, 27) && pqrs == Rational::make(1, 15) && oracle_klmn == klmn &&
                    oracle_pqrs == pqrs;
    return {ok, "v_klmn = " + klmn.str() + ", v_pqrs = " + pqrs.str() + " at (1/2,1/2,1/2,1/2), oracle agrees"};
}

Outcome criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    const auto tuples = oracle::sample_ratios(kSeed, kOracleTuples, oracle::Regime::mixed);
    const auto bases = oracle::sample_bases(kSeed + 1, kOracleBases);
    const std::size_t total = tuples.size() * bases.size();
    const std::size_t passed = parallel_count(total, [&](std::size_t i) {
        const RatioTuple& r = tuples[i / bases.size()];
        const auto [klmn, pqrs] = oracle::oracle_section_volumes(bases[i % bases.size()], r);
        return klmn == v_klmn_closed(r) && pqrs == v_pqrs_closed(r);
    });
    const double secs = seconds_since(start);
    return {passed == total && secs < kOracleBudgetSeconds,
            fraction(passed, total) + " (tuple, base) pairs exact, " + std::to_string(secs) + " s"};
}

Outcome criterion_decomposition() {
    const auto tuples = oracle::sample_ratios(kSeed + 2, kDecompositionTuples, oracle::Regime::below_one);
    const auto bases = oracle::sample_bases(kSeed + 3, kOracleBases);
    const Rational one(1);
    const std::size_t passed = parallel_count(tuples.size(), [&](std::size_t i) {
        const Tetra& base = bases[i % bases.size()];
        return oracle::oracle_decomposition(base, tuples[i], oracle::Decomposition::eq3) == one &&
               oracle::oracle_decomposition(base, tuples[i], oracle::Decomposition::eq4) == one;
    });
    return {passed == tuples.size(), fraction(passed, tuples.size()) + " tuples with xyzt<1 tile the base both ways"};
}

Outcome criterion_boundary() {
    const auto seeds = oracle::sample_ratios(kSeed + 4, kBoundaryTuples, oracle::Regime::mixed);
    const auto bases = oracle::sample_bases(kSeed + 5, kOracleBases);
    const std::size_t passed = parallel_count(seeds.size(), [&](std::size_t i) {
        const RatioTuple& s = seeds[i];
        const RatioTuple r(s.x(), s.y(), s.z(), (s.x() * s.y() * s.z()).reciprocal());
        const TetraSection sec = build_tetra_section(bases[i % bases.size()], r);
        const auto [oracle_klmn, oracle_pqrs] = oracle::oracle_section_volumes(bases[i % bases.size()], r);
        return r.product() == Rational(1) && v_klmn_closed(r).is_zero() && v_pqrs_closed(r).is_zero() &&
               oracle_klmn.is_zero() && oracle_pqrs.is_zero() && coplanar(sec.K, sec.L, sec.M, sec.N) &&
               sec.P == sec.Q && sec.Q == sec.R && sec.R == sec.S && menelaus_tetra(r) && ceva_tetra(r);
    });
    return {passed == seeds.size(), fraction(passed, seeds.size()) + " tuples with xyzt=1: zero volumes, coplanar KLMN, P=Q=R=S"};
}

Outcome criterion_collinearity() {
    const auto tuples = oracle::sample_ratios(kSeed, kOracleTuples, oracle::Regime::mixed);
    const auto bases = oracle::sample_bases(kSeed + 1, kOracleBases);
    const std::size_t passed = parallel_count(tuples.size(), [&](std::size_t i) {
        const TetraSection s = build_tetra_section(bases[i % bases.size()], tuples[i]);
        return collinear(s.P, s.K, s.M) && collinear(s.R, s.K, s.M) && collinear(s.Q, s.L, s.N) &&
               collinear(s.S, s.L, s.N);
    });
    return {passed == tuples.size(), fraction(passed, tuples.size()) + " sections with P,R on KM and Q,S on LN"};
}

Outcome criterion_duality() {
    const auto tuples = oracle::sample_ratios(kSeed + 6, kDualityTuples, oracle::Regime::mixed);
    std::size_t passed = 0;
    for (const RatioTuple& r : tuples) {
        const RatioTuple d = dual_parameters(r);
        const bool mapped = d.x() == r.z().reciprocal() && d.y() == r.y().reciprocal() &&
                            d.z() == r.x().reciprocal() && d.t() == r.t().reciprocal();
        if (mapped && v_klmn_closed(d) == v_klmn_closed(r) && v_pqrs_closed(d) == v_pqrs_closed(r)) ++passed;
    }
    return {passed == tuples.size(), fraction(passed, tuples.size()) + " tuples invariant under (1/z,1/y,1/x,1/t)"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"AC1 klmn tiling identity", criterion_eq3},
        {"AC2 pqrs tiling identity", criterion_eq4},
        {"AC3 triangle formulas", criterion_triangle},
        {"AC4 tetrahedron volumes", criterion_tetra_values},
        {"AC5 oracle equivalence", criterion_oracle_equivalence},
        {"AC6 decomposition sums", criterion_decomposition},
        {"AC7 concurrency boundary", criterion_boundary},
        {"AC8 collinearity", criterion_collinearity},
        {"AC9 duality", criterion_duality},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
