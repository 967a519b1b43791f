#include <doctest.h>

#include "routh/oracle.hpp"
#include "routh/routh.hpp"
#include "test_support.hpp"

using namespace routh;
using routh::testing::Q;

namespace {

RatioTuple tuple(const char* x, const char* y, const char* z, const char* t) { return {Q(x), Q(y), Q(z), Q(t)}; }

}  // namespace

TEST_CASE("canonical_base") {
    const Tetra base = oracle::canonical_base();
    CHECK(signed_volume(base) == Q("1/6"));
    CHECK(divide_segment(base.c(), base.d(), 1) == Point3{0, Q("1/2"), Q("1/2")});
    const AffineMap id(identity_matrix(), Point3{0, 0, 0});
    CHECK(id(base).vertices() == base.vertices());
}

TEST_CASE("oracle_section_volumes") {
    const Tetra base = oracle::canonical_base();
    CHECK(oracle::oracle_section_volumes(base, tuple("1", "1", "1", "1")) == std::pair<Rational, Rational>{0, 0});
    const auto half = oracle::oracle_section_volumes(base, tuple("1/2", "1/2", "1/2", "1/2"));
    CHECK(half.first == Q("5/27"));
    CHECK(half.second == Q("1/15"));
    CHECK(oracle::oracle_section_volumes(base, tuple("2", "1", "1", "1")).second == Q("1/840"));
}

TEST_CASE("oracle_decomposition") {
    const Tetra base = oracle::canonical_base();
    const RatioTuple half = tuple("1/2", "1/2", "1/2", "1/2");
    CHECK(oracle::oracle_decomposition(base, half, oracle::Decomposition::eq3) == 1);
    CHECK(oracle::oracle_decomposition(base, half, oracle::Decomposition::eq4) == 1);
    CHECK_THROWS_WITH_AS(oracle::oracle_decomposition(base, tuple("1", "1", "1", "1"), oracle::Decomposition::eq3),
                         "decomposition asserted only for xyzt<1", std::domain_error);
    CHECK_THROWS_AS(oracle::oracle_decomposition(base, tuple("2", "2", "2", "2"), oracle::Decomposition::eq4),
                    std::domain_error);
}

TEST_CASE("decompositions on random bases below one") {
    const auto bases = oracle::sample_bases(3, 4);
    std::size_t i = 0;
    for (const RatioTuple& r : oracle::sample_ratios(5, 40, oracle::Regime::below_one)) {
        const Tetra& base = bases[i++ % bases.size()];
        CHECK(oracle::oracle_decomposition(base, r, oracle::Decomposition::eq3) == 1);
        CHECK(oracle::oracle_decomposition(base, r, oracle::Decomposition::eq4) == 1);
    }
}

TEST_CASE("sample_ratios is deterministic and honors the regime") {
    CHECK(oracle::sample_ratios(99, 3, oracle::Regime::mixed) == oracle::sample_ratios(99, 3, oracle::Regime::mixed));
    CHECK(oracle::sample_ratios(99, 3, oracle::Regime::mixed) != oracle::sample_ratios(100, 3, oracle::Regime::mixed));
    for (const RatioTuple& r : oracle::sample_ratios(1, 100, oracle::Regime::below_one)) CHECK(r.product() < 1);
    for (const RatioTuple& r : oracle::sample_ratios(1, 100, oracle::Regime::above_one)) CHECK(r.product() > 1);
    bool saw_below = false, saw_above = false;
    for (const RatioTuple& r : oracle::sample_ratios(1, 100, oracle::Regime::mixed)) {
        saw_below = saw_below || r.product() < 1;
        saw_above = saw_above || r.product() > 1;
        for (const Rational& v : r.values()) {
            CHECK(v.is_positive());
            CHECK(v.numerator() <= 50);
            CHECK(v.denominator() <= 50);
        }
    }
    CHECK(saw_below);
    CHECK(saw_above);
    CHECK_THROWS_AS(oracle::sample_ratios(1, 0, oracle::Regime::mixed), std::invalid_argument);
}

TEST_CASE("sampled bases are non-degenerate and deterministic") {
    const auto a = oracle::sample_bases(11, 20);
    const auto b = oracle::sample_bases(11, 20);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].vertices() == b[i].vertices());
        CHECK_FALSE(signed_volume(a[i]).is_zero());
    }
}

TEST_CASE("oracle volumes are invariant under affine images of the base") {
    const auto maps = oracle::sample_affine_maps(13, 10);
    const Tetra unit = oracle::canonical_base();
    for (const RatioTuple& r : oracle::sample_ratios(17, 20, oracle::Regime::mixed)) {
        const auto reference = oracle::oracle_section_volumes(unit, r);
        for (const AffineMap& m : maps) CHECK(oracle::oracle_section_volumes(m(unit), r) == reference);
    }
}

TEST_CASE("oracle matches the closed forms") {
    const auto bases = oracle::sample_bases(19, 3);
    for (const RatioTuple& r : oracle::sample_ratios(23, 60, oracle::Regime::mixed)) {
        for (const Tetra& base : bases) {
            const auto [klmn, pqrs] = oracle::oracle_section_volumes(base, r);
            CHECK(klmn == v_klmn_closed(r));
            CHECK(pqrs == v_pqrs_closed(r));
        }
    }
}
