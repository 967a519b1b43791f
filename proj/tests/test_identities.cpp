#include <doctest.h>

#include "routh/identities.hpp"
#include "routh/routh.hpp"
#include "test_support.hpp"

using namespace routh;
using routh::testing::Q;

namespace {

std::array<Rational, 4> point(const char* x, const char* y, const char* z, const char* t) {
    return {Q(x), Q(y), Q(z), Q(t)};
}

}  // namespace

TEST_CASE("KLMN tiling identity") {
    const IdentityReport rep = verify_identity_eq3();
    CHECK(rep.verified);
    CHECK(rep.rhs_numerator == "1 - x*y*z*t");
    CHECK_FALSE(rep.lhs_numerator.empty());

    CHECK_FALSE(verify_identity_eq3(Mutation::flip_sign).verified);
    CHECK_FALSE(verify_identity_eq3(Mutation::perturb_denominator).verified);

    const IdentitySides sides = eq3_sides();
    const auto at = point("1/2", "1/3", "1/4", "1/5");
    const Rational expected = v_klmn_closed({Q("1/2"), Q("1/3"), Q("1/4"), Q("1/5")});
    CHECK(sides.lhs.eval(at) == expected);
    CHECK(sides.rhs.eval(at) == expected);
}

TEST_CASE("PQRS tiling identity") {
    const IdentityReport rep = verify_identity_eq4();
    CHECK(rep.verified);
    CHECK_FALSE(verify_identity_eq4(Mutation::flip_sign).verified);
    CHECK_FALSE(verify_identity_eq4(Mutation::perturb_denominator).verified);

    const IdentitySides sides = eq4_sides();
    const auto at = point("1/2", "1/2", "1/2", "1/2");
    CHECK(sides.lhs.eval(at) == Q("1/15"));
    CHECK(sides.rhs.eval(at) == Q("1/15"));
}

TEST_CASE("triangle identities") {
    CHECK(verify_identity_triangle().verified);
    CHECK_FALSE(verify_identity_triangle(Mutation::flip_sign).verified);
    CHECK_FALSE(verify_identity_triangle(Mutation::perturb_denominator).verified);

    const IdentitySides klm = triangle_klm_sides();
    const IdentitySides pqr = triangle_pqr_sides();
    CHECK(klm.lhs.eval(point("2", "2", "2", "0")) == Q("1/3"));
    CHECK(pqr.lhs.eval(point("2", "2", "2", "0")) == Q("1/7"));
    CHECK(klm.lhs.eval(point("1", "1", "1", "0")) == Q("1/4"));
    CHECK(pqr.lhs.eval(point("1", "1", "1", "0")) == 0);

    // t never appears in the triangle expressions.
    for (const auto* side : {&klm.lhs, &klm.rhs, &pqr.lhs, &pqr.rhs}) {
        for (const auto& [e, c] : side->num().terms()) CHECK(e[3] == 0);
        for (const auto& [e, c] : side->den().terms()) CHECK(e[3] == 0);
    }
}

TEST_CASE("verify_all_identities reports three identities") {
    const auto reps = verify_all_identities();
    REQUIRE(reps.size() == 3);
    for (const auto& r : reps) CHECK(r.verified);
}
