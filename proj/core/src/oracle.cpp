#include "routh/oracle.hpp"

#include <stdexcept>

namespace routh::oracle {

namespace {

constexpr std::uint64_t kRatioBound = 50;

struct Construction {
    Point3 K, L, M, N, P, Q, R, S;
};

Construction construct(const Tetra& base, const RatioTuple& r) {
    const auto& [A, B, C, D] = base.vertices();
    Construction c{divide_segment(C, D, r.x()), divide_segment(D, A, r.y()),
                   divide_segment(A, B, r.z()), divide_segment(B, C, r.t()),
                   {}, {}, {}, {}};
    const Plane abk = plane_through(A, B, c.K);
    const Plane bcl = plane_through(B, C, c.L);
    const Plane cdm = plane_through(C, D, c.M);
    const Plane dan = plane_through(D, A, c.N);
    // Each inner vertex lies on the three planes that do not carry its
    // opposite face of PQRS.
    c.P = intersect_three_planes(cdm, dan, abk);
    c.Q = intersect_three_planes(dan, abk, bcl);
    c.R = intersect_three_planes(bcl, cdm, abk);
    c.S = intersect_three_planes(dan, bcl, cdm);
    return c;
}

Rational fraction(const Rational& unit, const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return signed_volume(a, b, c, d).abs() / unit;
}

Rational small_ratio(std::mt19937_64& rng) {
    const auto n = static_cast<long>(1 + rng() % kRatioBound);
    const auto d = static_cast<long>(1 + rng() % kRatioBound);
    return Rational::make(n, d);
}

bool in_regime(const Rational& product, Regime regime) {
    switch (regime) {
        case Regime::below_one: return product < Rational(1);
        case Regime::above_one: return product > Rational(1);
        case Regime::mixed: return true;
    }
    return false;
}

}  // namespace

Tetra canonical_base() {
    return Tetra({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
}

std::pair<Rational, Rational> oracle_section_volumes(const Tetra& base, const RatioTuple& r) {
    const Construction c = construct(base, r);
    const Rational unit = signed_volume(base).abs();
    return {fraction(unit, c.K, c.L, c.M, c.N), fraction(unit, c.P, c.Q, c.R, c.S)};
}

std::pair<Rational, Rational> oracle_triangle_areas(const Point2& a, const Point2& b, const Point2& c,
                                                    const TriRatios& r) {
    const Rational unit = signed_area(a, b, c).abs();
    if (unit.is_zero()) throw std::domain_error("degenerate triangle");
    const Point2 m = divide_segment(a, b, r.x());
    const Point2 k = divide_segment(b, c, r.y());
    const Point2 l = divide_segment(c, a, r.z());
    const Point2 p = line_intersection_2d(a, k, c, m);
    const Point2 q = line_intersection_2d(b, l, a, k);
    const Point2 s = line_intersection_2d(c, m, b, l);
    return {signed_area(k, l, m).abs() / unit, signed_area(p, q, s).abs() / unit};
}

Rational oracle_decomposition(const Tetra& base, const RatioTuple& r, Decomposition which) {
    if (r.product() >= Rational(1)) throw std::domain_error("decomposition asserted only for xyzt<1");
    const Construction c = construct(base, r);
    const auto& [A, B, C, D] = base.vertices();
    const Rational unit = signed_volume(base).abs();
    if (which == Decomposition::eq3) {
        return fraction(unit, c.K, c.L, c.M, c.N) + fraction(unit, A, c.K, c.L, c.M) +
               fraction(unit, B, c.L, c.M, c.N) + fraction(unit, C, c.K, c.M, c.N) +
               fraction(unit, D, c.K, c.L, c.N) + fraction(unit, A, C, c.K, c.M) +
               fraction(unit, B, D, c.L, c.N);
    }
    return fraction(unit, A, c.P, c.K, D) + fraction(unit, B, c.Q, c.L, A) + fraction(unit, C, c.R, c.M, B) +
           fraction(unit, D, c.S, c.N, C) + fraction(unit, A, c.M, C, c.K) + fraction(unit, B, c.N, D, c.L) +
           fraction(unit, c.P, c.Q, c.R, c.S);
}

std::vector<RatioTuple> sample_ratios(std::uint64_t seed, std::size_t count, Regime regime) {
    if (count == 0) throw std::invalid_argument("count must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<RatioTuple> out;
    out.reserve(count);
    while (out.size() < count) {
        RatioTuple r(small_ratio(rng), small_ratio(rng), small_ratio(rng), small_ratio(rng));
        if (in_regime(r.product(), regime)) out.push_back(std::move(r));
    }
    return out;
}

std::vector<AffineMap> sample_affine_maps(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    const auto entry = [&rng](long lo, long span) { return Rational(lo + static_cast<long>(rng() % span)); };
    std::vector<AffineMap> out;
    out.reserve(count);
    while (out.size() < count) {
        Matrix3 m;
        for (auto& row : m) {
            for (auto& v : row) v = entry(-5, 11);
        }
        if (determinant(m).is_zero()) continue;
        Point3 shift{entry(-10, 21), entry(-10, 21), entry(-10, 21)};
        out.emplace_back(m, shift);
    }
    return out;
}

std::vector<Tetra> sample_bases(std::uint64_t seed, std::size_t count) {
    const Tetra unit = canonical_base();
    std::vector<Tetra> out;
    out.reserve(count);
    for (const AffineMap& map : sample_affine_maps(seed, count)) out.push_back(map(unit));
    return out;
}

}  // namespace routh::oracle
