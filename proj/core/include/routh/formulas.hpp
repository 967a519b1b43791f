#pragma once

/**
 * @file formulas.hpp
 * @brief Sub-area and sub-volume formulas, generic over the scalar type.
 *
 * Each template is instantiated twice: with Rational for numeric evaluation
 * and with RatFunc for symbolic identity checking, so the expressions that
 * are evaluated are exactly the expressions that are proven.
 *
 * Triangle ABC: M on AB with |AM|/|MB| = x, K on BC with |BK|/|KC| = y,
 * L on CA with |CL|/|LA| = z.
 *
 * Tetrahedron ABCD: K on CD with |CK|/|KD| = x, L on DA with |DL|/|LA| = y,
 * M on AB with |AM|/|MB| = z, N on BC with |BN|/|NC| = t.
 */

namespace routh::formulas {

/// r/(1+r): turns a part-to-part ratio |XP|/|PY| into the part-to-whole |XP|/|XY|.
template <class S>
S share(const S& r) {
    return r / (S(1) + r);
}

/// |AP|/|PK| for cevians AK and CM in triangle ABC with |AM|/|MB| = v, |BK|/|KC| = u.
template <class S>
S cevian_foot(const S& u, const S& v) {
    return v * (S(1) + u);
}

template <class S>
struct TriKlmCorners {
    S aml, bmk, ckl;
};

template <class S>
TriKlmCorners<S> tri_klm_corners(const S& x, const S& y, const S& z) {
    const S one(1);
    return {x / ((one + x) * (one + z)), y / ((one + x) * (one + y)), z / ((one + y) * (one + z))};
}

/// Triangles cut off between the cevians and each side: ABQ, BCR, CAP.
template <class S>
struct TriPqrCorners {
    S abq, bcr, cap;
};

template <class S>
TriPqrCorners<S> tri_pqr_corners(const S& x, const S& y, const S& z) {
    const S one(1);
    // |BQ|/|QL| = y(1+z), and [ABL] = 1/(1+z); the other two rotate.
    return {(one / (one + z)) * share(cevian_foot(z, y)),
            (one / (one + x)) * share(cevian_foot(x, z)),
            (one / (one + y)) * share(cevian_foot(y, x))};
}

/// The six tetrahedra that, together with KLMN, fill ABCD.
template <class S>
struct KlmnCorners {
    S aklm, blmn, ckmn, dkln, ackm, bdln;
};

template <class S>
KlmnCorners<S> klmn_corners(const S& x, const S& y, const S& z, const S& t) {
    const S one(1);
    return {
        z / ((one + z) * (one + x) * (one + y)),
        t / ((one + y) * (one + t) * (one + z)),
        x / ((one + z) * (one + x) * (one + t)),
        y / ((one + t) * (one + y) * (one + x)),
        (z / (one + z)) * (x / (one + x)),
        (t / (one + t)) * (y / (one + y)),
    };
}

/// The six tetrahedra that, together with PQRS, fill ABCD (for xyzt < 1).
template <class S>
struct PqrsCorners {
    S apkd, bqla, crmb, dsnc, amck, bndl;
};

template <class S>
PqrsCorners<S> pqrs_corners(const S& x, const S& y, const S& z, const S& t) {
    const S one(1);
    return {
        z / ((one + x) * (one + z + z * t + z * t * x)),
        t / ((one + y) * (one + t + t * x + t * x * y)),
        x / ((one + z) * (one + x + x * y + x * y * z)),
        y / ((one + t) * (one + y + y * z + y * z * t)),
        (z / (one + z)) * (x / (one + x)),
        (y / (one + y)) * (t / (one + t)),
    };
}

/// The same four cut corners as products of edge shares and cevian-foot
/// shares, before simplification. Foot points: F = CM∩AN, J = DN∩BK,
/// G = CL∩AK, H = BL∩DM.
template <class S>
PqrsCorners<S> pqrs_corner_chains(const S& x, const S& y, const S& z, const S& t) {
    const S one(1);
    const S cf_fm = cevian_foot(one / z, one / t);
    const S dp_pf = cevian_foot(cf_fm, one / x);
    const S dj_jn = cevian_foot(one / t, one / x);
    const S aq_qj = cevian_foot(dj_jn, one / y);
    const S cg_gl = cevian_foot(y, x);
    const S bh_hl = cevian_foot(one / y, one / z);
    const S br_rg = cevian_foot(one / cg_gl, bh_hl);
    const S cs_sh = cevian_foot(bh_hl, one / t);
    return {
        share(z) * share(cf_fm) * share(dp_pf) * (one / (one + x)),
        share(t) * share(dj_jn) * share(aq_qj) * (one / (one + y)),
        (one / (one + y)) * share(cg_gl) * share(br_rg) * (one / (one + z)),
        share(y) * share(bh_hl) * share(cs_sh) * (one / (one + t)),
        share(z) * share(x),
        share(y) * share(t),
    };
}

}  // namespace routh::formulas
