#pragma once

/**
 * @file oracle.hpp
 * @brief Coordinate-only recomputation of section volumes.
 *
 * Nothing in here calls a closed form or the section builder; every value
 * comes from dividing segments, intersecting planes and taking
 * determinants, so it can serve as the reference the closed forms are
 * checked against.
 */

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "routh/geometry.hpp"
#include "routh/routh.hpp"

namespace routh::oracle {

/// A=(0,0,0), B=(1,0,0), C=(0,1,0), D=(0,0,1); signed volume 1/6.
Tetra canonical_base();

/// (|V_KLMN|, |V_PQRS|) as fractions of |V_base|.
std::pair<Rational, Rational> oracle_section_volumes(const Tetra& base, const RatioTuple& r);

/// (|KLM|, |PQR|) as fractions of the triangle area, from line intersections.
std::pair<Rational, Rational> oracle_triangle_areas(const Point2& a, const Point2& b, const Point2& c,
                                                    const TriRatios& r);

enum class Decomposition { eq3, eq4 };

/// Sum of the seven tiling pieces as fractions of the base volume; 1 when
/// the tiling holds. Throws std::domain_error unless xyzt < 1.
Rational oracle_decomposition(const Tetra& base, const RatioTuple& r, Decomposition which);

enum class Regime { below_one, above_one, mixed };

/// Deterministic tuples with numerators and denominators in [1, 50].
/// below_one keeps xyzt < 1, above_one keeps xyzt > 1, mixed keeps everything.
std::vector<RatioTuple> sample_ratios(std::uint64_t seed, std::size_t count, Regime regime);

/// Deterministic invertible affine maps with small integer entries.
std::vector<AffineMap> sample_affine_maps(std::uint64_t seed, std::size_t count);

/// Images of the canonical base under sample_affine_maps.
std::vector<Tetra> sample_bases(std::uint64_t seed, std::size_t count);

}  // namespace routh::oracle
