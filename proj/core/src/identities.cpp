#include "routh/identities.hpp"

#include <chrono>

#include "routh/formulas.hpp"

namespace routh {

namespace {

struct Vars {
    RatFunc x{MultiPoly::x()};
    RatFunc y{MultiPoly::y()};
    RatFunc z{MultiPoly::z()};
    RatFunc t{MultiPoly::t()};
};

// Applies the mutation to the first corner term.
RatFunc one_minus(std::vector<RatFunc> corners, Mutation m) {
    std::vector<std::pair<int, RatFunc>> terms;
    terms.emplace_back(+1, RatFunc(1));
    for (std::size_t i = 0; i < corners.size(); ++i) {
        int sign = -1;
        RatFunc term = std::move(corners[i]);
        if (i == 0 && m == Mutation::flip_sign) sign = +1;
        if (i == 0 && m == Mutation::perturb_denominator) {
            term = RatFunc(term.num(), term.den() * (MultiPoly(1) + MultiPoly::x()));
        }
        terms.emplace_back(sign, std::move(term));
    }
    return ratfunc_combine(terms);
}

IdentityReport make_report(std::string name, const IdentitySides& sides, double elapsed_ms) {
    IdentityReport r;
    r.name = std::move(name);
    r.verified = ratfunc_eq(sides.lhs, sides.rhs);
    r.lhs_numerator = sides.lhs.num().str();
    r.lhs_denominator = sides.lhs.den().str();
    r.rhs_numerator = sides.rhs.num().str();
    r.rhs_denominator = sides.rhs.den().str();
    r.elapsed_ms = elapsed_ms;
    return r;
}

template <class Fn>
IdentityReport timed(std::string name, Fn&& build) {
    const auto start = std::chrono::steady_clock::now();
    const IdentitySides sides = build();
    IdentityReport r = make_report(std::move(name), sides, 0.0);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

IdentitySides eq3_sides(Mutation m) {
    const Vars v;
    const auto c = formulas::klmn_corners(v.x, v.y, v.z, v.t);
    RatFunc lhs = one_minus({c.aklm, c.blmn, c.ckmn, c.dkln, c.ackm, c.bdln}, m);

    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z(), t = MultiPoly::t();
    const MultiPoly one(1);
    RatFunc rhs(one - x * y * z * t, (one + x) * (one + y) * (one + z) * (one + t));
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides eq4_sides(Mutation m) {
    const Vars v;
    const auto c = formulas::pqrs_corners(v.x, v.y, v.z, v.t);
    RatFunc lhs = one_minus({c.apkd, c.bqla, c.crmb, c.dsnc, c.amck, c.bndl}, m);

    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z(), t = MultiPoly::t();
    const MultiPoly one(1);
    const MultiPoly denom = (one + x + x * y + x * y * z) * (one + y + y * z + y * z * t) *
                            (one + z + z * t + z * t * x) * (one + t + t * x + t * x * y);
    RatFunc rhs((one - x * y * z * t).pow(3), denom);
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides triangle_klm_sides(Mutation m) {
    const Vars v;
    const auto c = formulas::tri_klm_corners(v.x, v.y, v.z);
    RatFunc lhs = one_minus({c.aml, c.bmk, c.ckl}, m);

    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();
    const MultiPoly one(1);
    RatFunc rhs(one + x * y * z, (one + x) * (one + y) * (one + z));
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides triangle_pqr_sides(Mutation m) {
    const Vars v;
    const auto c = formulas::tri_pqr_corners(v.x, v.y, v.z);
    RatFunc lhs = one_minus({c.abq, c.bcr, c.cap}, m);

    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();
    const MultiPoly one(1);
    RatFunc rhs((one - x * y * z).pow(2), (one + x + x * y) * (one + y + y * z) * (one + z + z * x));
    return {std::move(lhs), std::move(rhs)};
}

IdentityReport verify_identity_eq3(Mutation m) {
    return timed("klmn_tiling", [m] { return eq3_sides(m); });
}

IdentityReport verify_identity_eq4(Mutation m) {
    return timed("pqrs_tiling", [m] { return eq4_sides(m); });
}

IdentityReport verify_identity_triangle(Mutation m) {
    const auto start = std::chrono::steady_clock::now();
    const IdentitySides klm = triangle_klm_sides(m);
    const IdentitySides pqr = triangle_pqr_sides(m);
    IdentityReport r = make_report("triangle", pqr, 0.0);
    r.verified = r.verified && ratfunc_eq(klm.lhs, klm.rhs);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<IdentityReport> verify_all_identities(Mutation m) {
    return {verify_identity_eq3(m), verify_identity_eq4(m), verify_identity_triangle(m)};
}

}  // namespace routh
