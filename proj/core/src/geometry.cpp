#include "routh/geometry.hpp"

#include <initializer_list>
#include <stdexcept>

namespace routh {

namespace {

void require_positive_ratio(const Rational& r) {
    if (!r.is_positive()) throw std::domain_error("ratio must be positive");
}

mpz_class lcm_of_denominators(std::initializer_list<const Rational*> values) {
    mpz_class l = 1;
    for (const Rational* v : values) l = lcm(l, v->denominator());
    return l;
}

Rational det3(const Point3& r0, const Point3& r1, const Point3& r2) {
    return dot(r0, cross(r1, r2));
}

}  // namespace

Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational determinant(const Matrix3& m) {
    return det3({m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}, {m[2][0], m[2][1], m[2][2]});
}

Matrix3 identity_matrix() {
    Matrix3 m;
    for (std::size_t i = 0; i < 3; ++i) m[i][i] = Rational(1);
    return m;
}

Point2 divide_segment(const Point2& a, const Point2& b, const Rational& r) {
    require_positive_ratio(r);
    const Rational w = (Rational(1) + r).reciprocal();
    return w * (a + r * b);
}

Point3 divide_segment(const Point3& a, const Point3& b, const Rational& r) {
    require_positive_ratio(r);
    const Rational w = (Rational(1) + r).reciprocal();
    return w * (a + r * b);
}

namespace {

// s with P = A + s (B - A), from the first coordinate where A and B differ.
template <std::size_t N>
Rational ratio_along(const std::array<Rational, N>& a, const std::array<Rational, N>& p,
                     const std::array<Rational, N>& b) {
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i] == b[i]) continue;
        const Rational s = (p[i] - a[i]) / (b[i] - a[i]);
        for (std::size_t j = 0; j < N; ++j) {
            if (p[j] != a[j] + s * (b[j] - a[j])) throw std::domain_error("point is not on the line");
        }
        if (s == Rational(1)) throw std::domain_error("point coincides with the far endpoint");
        return (s / (Rational(1) - s)).abs();
    }
    throw std::domain_error("degenerate segment");
}

}  // namespace

Rational measure_ratio(const Point2& a, const Point2& p, const Point2& b) {
    return ratio_along<2>({a.x, a.y}, {p.x, p.y}, {b.x, b.y});
}

Rational measure_ratio(const Point3& a, const Point3& p, const Point3& b) {
    return ratio_along<3>({a.x, a.y, a.z}, {p.x, p.y, p.z}, {b.x, b.y, b.z});
}

Rational signed_area(const Point2& a, const Point2& b, const Point2& c) {
    const Point2 u = b - a;
    const Point2 v = c - a;
    return (u.x * v.y - u.y * v.x) / Rational(2);
}

Rational signed_volume(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return det3(b - a, c - a, d - a) / Rational(6);
}

Tetra::Tetra(Point3 a, Point3 b, Point3 c, Point3 d) : v_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (signed_volume(v_[0], v_[1], v_[2], v_[3]).is_zero()) {
        throw std::domain_error("degenerate tetrahedron");
    }
}

Rational signed_volume(const Tetra& t) { return signed_volume(t.a(), t.b(), t.c(), t.d()); }

Plane plane_through(const Point3& p1, const Point3& p2, const Point3& p3) {
    const Point3 n = cross(p2 - p1, p3 - p1);
    if (n.x.is_zero() && n.y.is_zero() && n.z.is_zero()) throw std::domain_error("degenerate plane");
    const Rational d = dot(n, p1);
    const Rational scale(lcm_of_denominators({&n.x, &n.y, &n.z, &d}));
    return {scale * n.x, scale * n.y, scale * n.z, scale * d};
}

Point3 intersect_three_planes(const Plane& p1, const Plane& p2, const Plane& p3) {
    // Cramer's rule on the rows (a, b, c | d).
    const Point3 r1{p1.a, p1.b, p1.c};
    const Point3 r2{p2.a, p2.b, p2.c};
    const Point3 r3{p3.a, p3.b, p3.c};
    const Rational det = det3(r1, r2, r3);
    if (det.is_zero()) throw std::domain_error("planes not in general position");

    const Point3 c23 = cross(r2, r3);
    const Point3 c31 = cross(r3, r1);
    const Point3 c12 = cross(r1, r2);
    // Inverse of the row matrix has columns c23, c31, c12 (scaled by 1/det).
    const Point3 sum = p1.d * c23 + p2.d * c31 + p3.d * c12;
    return det.reciprocal() * sum;
}

Point2 line_intersection_2d(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2) {
    const Point2 u = a2 - a1;
    const Point2 v = b2 - b1;
    const Rational denom = u.x * v.y - u.y * v.x;
    if (denom.is_zero()) throw std::domain_error("lines are parallel or coincident");
    const Point2 w = b1 - a1;
    const Rational s = (w.x * v.y - w.y * v.x) / denom;
    return a1 + s * u;
}

Point3 intersect_line_plane(const Point3& p, const Point3& q, const Plane& plane) {
    const Point3 dir = q - p;
    const Rational denom = plane.a * dir.x + plane.b * dir.y + plane.c * dir.z;
    if (denom.is_zero()) throw std::domain_error("line parallel to plane");
    const Rational s = -plane.residual(p) / denom;
    return p + s * dir;
}

bool collinear(const Point2& p, const Point2& q, const Point2& r) { return signed_area(p, q, r).is_zero(); }

bool collinear(const Point3& p, const Point3& q, const Point3& r) {
    const Point3 n = cross(q - p, r - p);
    return n.x.is_zero() && n.y.is_zero() && n.z.is_zero();
}

bool coplanar(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    return signed_volume(p, q, r, s).is_zero();
}

AffineMap::AffineMap(Matrix3 linear, Point3 shift)
    : m_(std::move(linear)), shift_(std::move(shift)), det_(determinant(m_)) {
    if (det_.is_zero()) throw std::domain_error("singular matrix");
}

Point3 AffineMap::operator()(const Point3& p) const {
    return Point3{m_[0][0] * p.x + m_[0][1] * p.y + m_[0][2] * p.z,
                  m_[1][0] * p.x + m_[1][1] * p.y + m_[1][2] * p.z,
                  m_[2][0] * p.x + m_[2][1] * p.y + m_[2][2] * p.z} +
           shift_;
}

Tetra AffineMap::operator()(const Tetra& t) const {
    return Tetra((*this)(t.a()), (*this)(t.b()), (*this)(t.c()), (*this)(t.d()));
}

Point3 affine_apply(const Matrix3& m, const Point3& shift, const Point3& p) {
    return AffineMap(m, shift)(p);
}

}  // namespace routh
