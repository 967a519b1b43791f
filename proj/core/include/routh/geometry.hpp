#pragma once

/**
 * @file geometry.hpp
 * @brief Exact affine primitives over Rational.
 *
 * Every predicate here is an exact sign test on a determinant; there is no
 * tolerance anywhere. Degenerate configurations are reported by throwing
 * std::domain_error.
 */

#include <array>

#include "routh/rational.hpp"

namespace routh {

struct Point2 {
    Rational x, y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
    Rational x, y, z;

    friend bool operator==(const Point3&, const Point3&) = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(const Rational& s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }

Rational dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);

/// a*X + b*Y + c*Z = d, with integer coefficients and (a,b,c) != 0.
struct Plane {
    Rational a, b, c, d;

    /// Left-hand side minus right-hand side; zero exactly on the plane.
    Rational residual(const Point3& p) const { return a * p.x + b * p.y + c * p.z - d; }
    bool contains(const Point3& p) const { return residual(p).is_zero(); }
};

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Rational determinant(const Matrix3& m);
Matrix3 identity_matrix();

/// Point P on segment AB with |AP|/|PB| = r. Throws for r <= 0.
Point2 divide_segment(const Point2& a, const Point2& b, const Rational& r);
Point3 divide_segment(const Point3& a, const Point3& b, const Rational& r);

/// Inverse of divide_segment: |AP|/|PB| for P on line AB strictly between
/// or beyond the endpoints. Throws when P is off the line, equals B, or A == B.
Rational measure_ratio(const Point2& a, const Point2& p, const Point2& b);
Rational measure_ratio(const Point3& a, const Point3& p, const Point3& b);

Rational signed_area(const Point2& a, const Point2& b, const Point2& c);
Rational signed_volume(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Non-degenerate tetrahedron with vertices ordered (A, B, C, D).
class Tetra {
public:
    /// Throws std::domain_error("degenerate tetrahedron") for coplanar vertices.
    Tetra(Point3 a, Point3 b, Point3 c, Point3 d);

    const Point3& a() const { return v_[0]; }
    const Point3& b() const { return v_[1]; }
    const Point3& c() const { return v_[2]; }
    const Point3& d() const { return v_[3]; }
    const std::array<Point3, 4>& vertices() const { return v_; }

private:
    std::array<Point3, 4> v_;
};

Rational signed_volume(const Tetra& t);

/// Throws std::domain_error("degenerate plane") when the points are collinear.
Plane plane_through(const Point3& p1, const Point3& p2, const Point3& p3);

/// Throws std::domain_error("planes not in general position") for a singular system.
Point3 intersect_three_planes(const Plane& p1, const Plane& p2, const Plane& p3);

/// Intersection of line a1a2 with line b1b2. Throws for parallel or coincident lines.
Point2 line_intersection_2d(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2);

/// Intersection of line pq with a plane. Throws when the line is parallel to it.
Point3 intersect_line_plane(const Point3& p, const Point3& q, const Plane& plane);

bool collinear(const Point2& p, const Point2& q, const Point2& r);
bool collinear(const Point3& p, const Point3& q, const Point3& r);
bool coplanar(const Point3& p, const Point3& q, const Point3& r, const Point3& s);

/// Invertible affine map X -> M*X + shift.
class AffineMap {
public:
    /// Throws std::domain_error("singular matrix") when det(M) == 0.
    AffineMap(Matrix3 linear, Point3 shift);

    Point3 operator()(const Point3& p) const;
    Tetra operator()(const Tetra& t) const;
    const Rational& det() const { return det_; }

private:
    Matrix3 m_;
    Point3 shift_;
    Rational det_;
};

/// M*P + shift; throws when M is singular.
Point3 affine_apply(const Matrix3& m, const Point3& shift, const Point3& p);

}  // namespace routh
