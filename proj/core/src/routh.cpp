#include "routh/routh.hpp"

#include <stdexcept>

#include "routh/formulas.hpp"

namespace routh {

namespace {

void require_positive(const Rational& r) {
    if (!r.is_positive()) throw std::domain_error("ratio must be positive");
}

const Rational kOne(1);

}  // namespace

RatioTuple::RatioTuple(Rational x, Rational y, Rational z, Rational t)
    : v_{std::move(x), std::move(y), std::move(z), std::move(t)} {
    for (const auto& v : v_) require_positive(v);
}

TriRatios::TriRatios(Rational x, Rational y, Rational z) : v_{std::move(x), std::move(y), std::move(z)} {
    for (const auto& v : v_) require_positive(v);
}

Rational routh_tri_cevian_area(const TriRatios& r) {
    return (kOne + r.product()) / ((kOne + r.x()) * (kOne + r.y()) * (kOne + r.z()));
}

Rational routh_tri_central_area(const TriRatios& r) {
    const Rational gap = kOne - r.product();
    const Rational& x = r.x();
    const Rational& y = r.y();
    const Rational& z = r.z();
    return gap * gap / ((kOne + x + x * y) * (kOne + y + y * z) * (kOne + z + z * x));
}

Rational v_klmn_closed(const RatioTuple& r) {
    const Rational gap = (kOne - r.product()).abs();
    return gap / ((kOne + r.x()) * (kOne + r.y()) * (kOne + r.z()) * (kOne + r.t()));
}

Rational v_pqrs_closed(const RatioTuple& r) {
    const Rational gap = (kOne - r.product()).abs();
    const Rational& x = r.x();
    const Rational& y = r.y();
    const Rational& z = r.z();
    const Rational& t = r.t();
    const Rational denom = (kOne + x + x * y + x * y * z) * (kOne + y + y * z + y * z * t) *
                           (kOne + z + z * t + z * t * x) * (kOne + t + t * x + t * x * y);
    return gap * gap * gap / denom;
}

Rational cevian_foot_ratio(const Rational& u, const Rational& v) {
    require_positive(u);
    require_positive(v);
    return formulas::cevian_foot(u, v);
}

Rational lemma1_ratio(const Rational& base_volume, const Rational& frac) {
    if (!frac.is_positive() || frac >= kOne) throw std::domain_error("fraction must lie strictly between 0 and 1");
    return base_volume * frac;
}

VolumeMap corner_volumes_klmn(const RatioTuple& r) {
    const auto c = formulas::klmn_corners(r.x(), r.y(), r.z(), r.t());
    return {{"AKLM", c.aklm}, {"BLMN", c.blmn}, {"CKMN", c.ckmn},
            {"DKLN", c.dkln}, {"ACKM", c.ackm}, {"BDLN", c.bdln}};
}

VolumeMap cut_corner_volumes_pqrs(const RatioTuple& r) {
    const auto c = formulas::pqrs_corners(r.x(), r.y(), r.z(), r.t());
    return {{"APKD", c.apkd}, {"BQLA", c.bqla}, {"CRMB", c.crmb},
            {"DSNC", c.dsnc}, {"AMCK", c.amck}, {"BNDL", c.bndl}};
}

bool ceva_tri(const TriRatios& r) { return r.product() == kOne; }

bool menelaus_tetra(const RatioTuple& r) { return r.product() == kOne; }

bool ceva_tetra(const RatioTuple& r) { return r.product() == kOne; }

RatioTuple dual_parameters(const RatioTuple& r) {
    return {r.z().reciprocal(), r.y().reciprocal(), r.x().reciprocal(), r.t().reciprocal()};
}

TriSection build_tri_section(const Point2& a, const Point2& b, const Point2& c, const TriRatios& r) {
    const Rational area = signed_area(a, b, c);
    if (area.is_zero()) throw std::domain_error("degenerate triangle");

    TriSection s{{a, b, c}, {}, {}, {}, {}, {}, {}, {}, {}, false};
    s.M = divide_segment(a, b, r.x());
    s.K = divide_segment(b, c, r.y());
    s.L = divide_segment(c, a, r.z());
    s.P = line_intersection_2d(a, s.K, c, s.M);
    s.Q = line_intersection_2d(b, s.L, a, s.K);
    s.R = line_intersection_2d(c, s.M, b, s.L);

    const Rational unit = area.abs();
    s.area_klm = signed_area(s.K, s.L, s.M).abs() / unit;
    s.area_pqr = signed_area(s.P, s.Q, s.R).abs() / unit;
    s.is_ceva = ceva_tri(r);
    return s;
}

TetraSection build_tetra_section(const Tetra& base, const RatioTuple& r) {
    const Point3& A = base.a();
    const Point3& B = base.b();
    const Point3& C = base.c();
    const Point3& D = base.d();

    const Point3 K = divide_segment(C, D, r.x());
    const Point3 L = divide_segment(D, A, r.y());
    const Point3 M = divide_segment(A, B, r.z());
    const Point3 N = divide_segment(B, C, r.t());

    const Plane abk = plane_through(A, B, K);
    const Plane bcl = plane_through(B, C, L);
    const Plane cdm = plane_through(C, D, M);
    const Plane dan = plane_through(D, A, N);

    TetraSection s{base, K, L, M, N, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, false, false};
    s.P = intersect_three_planes(abk, cdm, dan);
    s.Q = intersect_three_planes(abk, bcl, dan);
    s.R = intersect_three_planes(abk, bcl, cdm);
    s.S = intersect_three_planes(bcl, cdm, dan);

    // Each foot is a face cevian meeting the trace of a cutting plane on that face.
    s.F = intersect_line_plane(C, M, dan);
    s.J = intersect_line_plane(D, N, abk);
    s.G = intersect_line_plane(C, L, abk);
    s.H = intersect_line_plane(B, L, cdm);

    const Rational unit = signed_volume(base).abs();
    const auto frac = [&unit](const Point3& p, const Point3& q, const Point3& u, const Point3& v) {
        return signed_volume(p, q, u, v).abs() / unit;
    };
    const Point3& P = s.P;
    const Point3& Q = s.Q;
    const Point3& R = s.R;
    const Point3& S = s.S;

    s.v_klmn = frac(K, L, M, N);
    s.v_pqrs = frac(P, Q, R, S);
    s.sub_volumes = {
        {"AKLM", frac(A, K, L, M)}, {"BLMN", frac(B, L, M, N)}, {"CKMN", frac(C, K, M, N)},
        {"DKLN", frac(D, K, L, N)}, {"ACKM", frac(A, C, K, M)}, {"BDLN", frac(B, D, L, N)},
        {"APKD", frac(A, P, K, D)}, {"BQLA", frac(B, Q, L, A)}, {"CRMB", frac(C, R, M, B)},
        {"DSNC", frac(D, S, N, C)}, {"AMCK", frac(A, M, C, K)}, {"BNDL", frac(B, N, D, L)},
    };
    s.is_menelaus = menelaus_tetra(r);
    s.is_ceva = ceva_tetra(r);
    return s;
}

}  // namespace routh
