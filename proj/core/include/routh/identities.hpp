#pragma once

// Symbolic proofs of the tiling identities: one minus the corner pieces,
// summed over a common denominator, equals the closed-form inner volume
// as a rational function in x, y, z, t.

#include <string>
#include <utility>
#include <vector>

#include "routh/polynomial.hpp"

namespace routh {

/// Deliberate corruption of one input term, used to check that the
/// verification harness can fail.
enum class Mutation { none, flip_sign, perturb_denominator };

struct IdentityReport {
    std::string name;
    bool verified = false;
    /// Combined left-hand side (after ratfunc_combine) and the target.
    std::string lhs_numerator;
    std::string lhs_denominator;
    std::string rhs_numerator;
    std::string rhs_denominator;
    double elapsed_ms = 0.0;
};

/// Both sides of an identity, lhs already combined into one quotient.
struct IdentitySides {
    RatFunc lhs;
    RatFunc rhs;
};

/// 1 - (six KLMN corner pieces) against (1 - xyzt)/((1+x)(1+y)(1+z)(1+t)).
IdentitySides eq3_sides(Mutation m = Mutation::none);

/// 1 - (six PQRS cut corners) against (1 - xyzt)^3 / product of the four cyclic cubics.
IdentitySides eq4_sides(Mutation m = Mutation::none);

/// Triangle: 1 - (three KLM corners) = (1 + xyz)/((1+x)(1+y)(1+z)).
IdentitySides triangle_klm_sides(Mutation m = Mutation::none);

/// Triangle: 1 - (ABQ + BCR + CAP) = (1 - xyz)^2/((1+x+xy)(1+y+yz)(1+z+zx)).
IdentitySides triangle_pqr_sides(Mutation m = Mutation::none);

IdentityReport verify_identity_eq3(Mutation m = Mutation::none);
IdentityReport verify_identity_eq4(Mutation m = Mutation::none);
/// Verified only when both triangle identities hold.
IdentityReport verify_identity_triangle(Mutation m = Mutation::none);

std::vector<IdentityReport> verify_all_identities(Mutation m = Mutation::none);

}  // namespace routh
