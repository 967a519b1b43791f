#pragma once

/**
 * @file routh.hpp
 * @brief Cevian sections of triangles and tetrahedra.
 *
 * A tetrahedron ABCD is cut by four planes, each through one edge of the
 * cycle (A B C D) and a point on the opposite edge:
 *
 *   plane ABK with K on CD, |CK|/|KD| = x
 *   plane BCL with L on DA, |DL|/|LA| = y
 *   plane CDM with M on AB, |AM|/|MB| = z
 *   plane DAN with N on BC, |BN|/|NC| = t
 *
 * The planes enclose a tetrahedron PQRS whose vertices each lie on three
 * of them. The edge points K, L, M, N span a second tetrahedron. Volumes
 * are reported as nonnegative fractions of the base volume.
 */

#include <array>
#include <map>
#include <string>

#include "routh/geometry.hpp"
#include "routh/rational.hpp"

namespace routh {

/// Strictly positive edge-division ratios (x, y, z, t).
class RatioTuple {
public:
    /// Throws std::domain_error("ratio must be positive") for any component <= 0.
    RatioTuple(Rational x, Rational y, Rational z, Rational t);

    const Rational& x() const { return v_[0]; }
    const Rational& y() const { return v_[1]; }
    const Rational& z() const { return v_[2]; }
    const Rational& t() const { return v_[3]; }
    const std::array<Rational, 4>& values() const { return v_; }

    Rational product() const { return v_[0] * v_[1] * v_[2] * v_[3]; }

    friend bool operator==(const RatioTuple&, const RatioTuple&) = default;

private:
    std::array<Rational, 4> v_;
};

/// Strictly positive triangle ratios (x, y, z).
class TriRatios {
public:
    TriRatios(Rational x, Rational y, Rational z);

    const Rational& x() const { return v_[0]; }
    const Rational& y() const { return v_[1]; }
    const Rational& z() const { return v_[2]; }

    Rational product() const { return v_[0] * v_[1] * v_[2]; }

private:
    std::array<Rational, 3> v_;
};

using VolumeMap = std::map<std::string, Rational, std::less<>>;

// Triangle closed forms.
Rational routh_tri_cevian_area(const TriRatios& r);
Rational routh_tri_central_area(const TriRatios& r);

// Tetrahedron closed forms.
Rational v_klmn_closed(const RatioTuple& r);
Rational v_pqrs_closed(const RatioTuple& r);

/// |AP|/|PK| where cevians AK and CM of triangle ABC cross at P,
/// |AM|/|MB| = v and |BK|/|KC| = u. Result v(1+u).
Rational cevian_foot_ratio(const Rational& u, const Rational& v);

/// Volume after moving one vertex along an edge to a point at fraction
/// `frac` of the way: V_AMCD = V_ABCD * |AM|/|AB|. Compose twice for the
/// two-edge version. Throws unless 0 < frac < 1.
Rational lemma1_ratio(const Rational& base_volume, const Rational& frac);

/// Keys AKLM, BLMN, CKMN, DKLN, ACKM, BDLN.
VolumeMap corner_volumes_klmn(const RatioTuple& r);

/// Keys APKD, BQLA, CRMB, DSNC, AMCK, BNDL. The values equal the coordinate
/// volumes for any positive ratios, but the six pieces tile ABCD together
/// with PQRS only when xyzt < 1.
VolumeMap cut_corner_volumes_pqrs(const RatioTuple& r);

bool ceva_tri(const TriRatios& r);
bool menelaus_tetra(const RatioTuple& r);
bool ceva_tetra(const RatioTuple& r);

/// (x, y, z, t) -> (1/z, 1/y, 1/x, 1/t), the ratios seen along the reversed cycle (D C B A).
RatioTuple dual_parameters(const RatioTuple& r);

struct TriSection {
    std::array<Point2, 3> base;  // A, B, C
    Point2 K, L, M;
    Point2 P, Q, R;  // P = AK∩CM, Q = BL∩AK, R = CM∩BL
    Rational area_klm;
    Rational area_pqr;
    bool is_ceva = false;
};

/// Throws std::domain_error for a degenerate base; at xyz = 1 the three
/// cevians are concurrent and P = Q = R.
TriSection build_tri_section(const Point2& a, const Point2& b, const Point2& c, const TriRatios& r);

struct TetraSection {
    Tetra base;
    Point3 K, L, M, N;
    /// P on ABK, CDM, DAN; Q on ABK, BCL, DAN; R on ABK, BCL, CDM; S on BCL, CDM, DAN.
    Point3 P, Q, R, S;
    /// F = CM∩AN, J = DN∩BK, G = CL∩AK, H = BL∩DM.
    Point3 F, G, H, J;
    Rational v_klmn;
    Rational v_pqrs;
    /// Coordinate volumes (as fractions of the base) of the twelve
    /// sub-tetrahedra keyed as in corner_volumes_klmn and cut_corner_volumes_pqrs.
    VolumeMap sub_volumes;
    bool is_menelaus = false;
    bool is_ceva = false;
};

TetraSection build_tetra_section(const Tetra& base, const RatioTuple& r);

}  // namespace routh
