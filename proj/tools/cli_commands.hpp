#pragma once

// Report builders behind the `routh` subcommands. Kept out of main.cpp so
// the tests can drive them without spawning a process.

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "routh/identities.hpp"
#include "routh/routh.hpp"

namespace routh::cli {

inline constexpr unsigned kDecimalDigits = 12;

nlohmann::json tri_report(const TriRatios& r);

nlohmann::json tet_report(const RatioTuple& r, const TetraSection& s);
std::string tet_text(const RatioTuple& r, const TetraSection& s);

/// OBJ: 12 vertices (A B C D, K L M N, P Q R S), base edges and the KM/LN
/// carrier lines as `l` elements, the faces of KLMN and PQRS as `f`.
void write_obj(std::ostream& out, const TetraSection& s);

/// Twelve rationals "ax ay az bx ... dz" in vertex order A, B, C, D.
Tetra parse_base(const std::vector<std::string>& coords);

struct VerifyOptions {
    bool symbolic = false;
    bool numeric = false;
    std::uint64_t seed = 42;
    std::size_t count = 100;
    std::size_t bases = 20;
    unsigned threads = 0;  // 0: hardware concurrency
    Mutation mutation = Mutation::none;
};

/// Prints one PASS/FAIL line per check; returns 0 iff every check passed.
int run_verify(const VerifyOptions& opts, std::ostream& out);

struct SweepOptions {
    char vary = 'x';
    Rational from;
    Rational to;
    unsigned steps = 2;
    Rational x{1}, y{1}, z{1}, t{1};
};

/// CSV "param,v_klmn,v_pqrs" with `steps` equally spaced rows, endpoints
/// included. Throws std::invalid_argument for a bad range.
void write_sweep(std::ostream& out, const SweepOptions& opts);

}  // namespace routh::cli
