#include "cli_commands.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "routh/oracle.hpp"

namespace routh::cli {

namespace {

using nlohmann::json;

std::string dec(const Rational& r) { return r.to_decimal(kDecimalDigits); }

json exact_point(const Point3& p) { return json::array({p.x.str(), p.y.str(), p.z.str()}); }
json decimal_point(const Point3& p) { return json::array({dec(p.x), dec(p.y), dec(p.z)}); }

void put_scalar(json& j, const std::string& key, const Rational& v) {
    j[key] = v.str();
    j[key + "_decimal"] = dec(v);
}

struct NamedPoint {
    const char* name;
    const Point3* point;
};

std::vector<NamedPoint> section_points(const TetraSection& s) {
    return {{"A", &s.base.a()}, {"B", &s.base.b()}, {"C", &s.base.c()}, {"D", &s.base.d()},
            {"K", &s.K},        {"L", &s.L},        {"M", &s.M},        {"N", &s.N},
            {"P", &s.P},        {"Q", &s.Q},        {"R", &s.R},        {"S", &s.S},
            {"F", &s.F},        {"G", &s.G},        {"H", &s.H},        {"J", &s.J}};
}

// Outcome of every numeric check for one sampled tuple.
struct SampleOutcome {
    bool oracle_equivalence = true;
    bool section_equivalence = true;
    bool corner_volumes = true;
    bool collinearity = true;
    bool duality = true;
    bool affine_invariance = true;
    bool cevian_feet = true;
    bool decomposition = true;  // only evaluated below one
    bool below_one = false;
    bool boundary = true;
};

SampleOutcome check_sample(const Tetra& base, const Tetra& unit_base, const RatioTuple& r,
                           const RatioTuple& boundary_tuple) {
    SampleOutcome o;
    const Rational closed_klmn = v_klmn_closed(r);
    const Rational closed_pqrs = v_pqrs_closed(r);

    const auto [oracle_klmn, oracle_pqrs] = oracle::oracle_section_volumes(base, r);
    o.oracle_equivalence = oracle_klmn == closed_klmn && oracle_pqrs == closed_pqrs;

    const TetraSection s = build_tetra_section(base, r);
    o.section_equivalence = s.v_klmn == closed_klmn && s.v_pqrs == closed_pqrs;

    for (const auto& [name, value] : corner_volumes_klmn(r)) {
        if (s.sub_volumes.at(name) != value) o.corner_volumes = false;
    }

    o.collinearity = collinear(s.P, s.K, s.M) && collinear(s.R, s.K, s.M) && collinear(s.Q, s.L, s.N) &&
                     collinear(s.S, s.L, s.N);

    const RatioTuple dual = dual_parameters(r);
    o.duality = v_klmn_closed(dual) == closed_klmn && v_pqrs_closed(dual) == closed_pqrs;

    const TetraSection unit = build_tetra_section(unit_base, r);
    o.affine_invariance = unit.v_klmn == s.v_klmn && unit.v_pqrs == s.v_pqrs && unit.sub_volumes == s.sub_volumes;

    const Rational one(1);
    o.cevian_feet =
        measure_ratio(base.c(), s.F, s.M) == cevian_foot_ratio(r.z().reciprocal(), r.t().reciprocal()) &&
        measure_ratio(base.d(), s.J, s.N) == cevian_foot_ratio(r.t().reciprocal(), r.x().reciprocal()) &&
        measure_ratio(base.c(), s.G, s.L) == cevian_foot_ratio(r.y(), r.x()) &&
        measure_ratio(base.b(), s.H, s.L) == cevian_foot_ratio(r.y().reciprocal(), r.z().reciprocal());

    o.below_one = r.product() < one;
    if (o.below_one) {
        o.decomposition = oracle::oracle_decomposition(base, r, oracle::Decomposition::eq3) == one &&
                          oracle::oracle_decomposition(base, r, oracle::Decomposition::eq4) == one;
        for (const auto& [name, value] : cut_corner_volumes_pqrs(r)) {
            if (s.sub_volumes.at(name) != value) o.corner_volumes = false;
        }
    }

    const TetraSection b = build_tetra_section(base, boundary_tuple);
    o.boundary = b.v_klmn.is_zero() && b.v_pqrs.is_zero() && v_klmn_closed(boundary_tuple).is_zero() &&
                 v_pqrs_closed(boundary_tuple).is_zero() && coplanar(b.K, b.L, b.M, b.N) && b.P == b.Q &&
                 b.Q == b.R && b.R == b.S && b.is_menelaus && b.is_ceva;
    return o;
}

// "l i j ..." through points on line ab, ordered by position along it.
std::string carrier_polyline(const Point3& a, const Point3& b, std::vector<std::pair<int, const Point3*>> pts) {
    const Point3 dir = b - a;
    const auto position = [&](const Point3* p) { return dot(*p - a, dir); };
    std::sort(pts.begin(), pts.end(), [&](const auto& l, const auto& r) { return position(l.second) < position(r.second); });
    std::string out = "l";
    for (const auto& [index, p] : pts) out += " " + std::to_string(index);
    return out;
}

void line(std::ostream& out, bool ok, const std::string& name, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
}

}  // namespace

nlohmann::json tri_report(const TriRatios& r) {
    json j;
    j["x"] = r.x().str();
    j["y"] = r.y().str();
    j["z"] = r.z().str();
    put_scalar(j, "area_klm", routh_tri_cevian_area(r));
    put_scalar(j, "area_pqr", routh_tri_central_area(r));
    j["ceva"] = ceva_tri(r);
    return j;
}

nlohmann::json tet_report(const RatioTuple& r, const TetraSection& s) {
    json j;
    j["x"] = r.x().str();
    j["y"] = r.y().str();
    j["z"] = r.z().str();
    j["t"] = r.t().str();
    json points = json::object();
    json points_decimal = json::object();
    for (const auto& [name, p] : section_points(s)) {
        points[name] = exact_point(*p);
        points_decimal[name] = decimal_point(*p);
    }
    j["points"] = std::move(points);
    j["points_decimal"] = std::move(points_decimal);
    put_scalar(j, "base_volume", signed_volume(s.base).abs());
    put_scalar(j, "v_klmn", s.v_klmn);
    put_scalar(j, "v_pqrs", s.v_pqrs);
    json subs = json::object();
    json subs_decimal = json::object();
    for (const auto& [name, v] : s.sub_volumes) {
        subs[name] = v.str();
        subs_decimal[name] = dec(v);
    }
    j["sub_volumes"] = std::move(subs);
    j["sub_volumes_decimal"] = std::move(subs_decimal);
    j["menelaus"] = s.is_menelaus;
    j["ceva"] = s.is_ceva;
    return j;
}

std::string tet_text(const RatioTuple& r, const TetraSection& s) {
    std::ostringstream os;
    os << "ratios  x=" << r.x() << " y=" << r.y() << " z=" << r.z() << " t=" << r.t() << "\n";
    os << "V_KLMN  " << s.v_klmn << "  (" << dec(s.v_klmn) << ")\n";
    os << "V_PQRS  " << s.v_pqrs << "  (" << dec(s.v_pqrs) << ")\n";
    os << "menelaus (K,L,M,N coplanar): " << (s.is_menelaus ? "yes" : "no") << "\n";
    os << "ceva (four planes concurrent): " << (s.is_ceva ? "yes" : "no") << "\n";
    os << "points:\n";
    for (const auto& [name, p] : section_points(s)) {
        os << "  " << name << " = (" << p->x << ", " << p->y << ", " << p->z << ")\n";
    }
    os << "sub-volumes:\n";
    for (const auto& [name, v] : s.sub_volumes) os << "  " << name << " = " << v << "\n";
    return os.str();
}

void write_obj(std::ostream& out, const TetraSection& s) {
    out << "# cevian section: base ABCD, edge points KLMN, inner tetrahedron PQRS\n";
    const std::array<const Point3*, 12> verts{&s.base.a(), &s.base.b(), &s.base.c(), &s.base.d(), &s.K, &s.L,
                                              &s.M,        &s.N,        &s.P,        &s.Q,        &s.R, &s.S};
    for (const Point3* p : verts) {
        out << "v " << dec(p->x) << ' ' << dec(p->y) << ' ' << dec(p->z) << '\n';
    }
    // 1-based indices: A..D = 1..4, K..N = 5..8, P..S = 9..12.
    out << "g base\n";
    out << "l 1 2\nl 1 3\nl 1 4\nl 2 3\nl 2 4\nl 3 4\n";
    out << "g klmn\n";
    out << "f 5 6 7\nf 5 6 8\nf 5 7 8\nf 6 7 8\n";
    out << "g pqrs\n";
    out << "f 9 10 11\nf 9 10 12\nf 9 11 12\nf 10 11 12\n";
    out << "g carriers\n";
    out << carrier_polyline(s.K, s.M, {{5, &s.K}, {7, &s.M}, {9, &s.P}, {11, &s.R}}) << '\n';
    out << carrier_polyline(s.L, s.N, {{6, &s.L}, {8, &s.N}, {10, &s.Q}, {12, &s.S}}) << '\n';
}

Tetra parse_base(const std::vector<std::string>& coords) {
    if (coords.size() != 12) throw std::invalid_argument("base needs 12 coordinates");
    std::array<Rational, 12> v;
    for (std::size_t i = 0; i < 12; ++i) v[i] = Rational::parse(coords[i]);
    return Tetra({v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}, {v[9], v[10], v[11]});
}

int run_verify(const VerifyOptions& opts, std::ostream& out) {
    bool all_ok = true;

    if (opts.symbolic) {
        for (const IdentityReport& rep : verify_all_identities(opts.mutation)) {
            std::ostringstream detail;
            detail << "symbolic, " << rep.elapsed_ms << " ms";
            line(out, rep.verified, "identity " + rep.name, detail.str());
            all_ok = all_ok && rep.verified;
        }
    }

    if (opts.numeric) {
        if (opts.count == 0 || opts.bases == 0) throw std::invalid_argument("count and bases must be positive");
        const auto tuples = oracle::sample_ratios(opts.seed, opts.count, oracle::Regime::mixed);
        const auto bases = oracle::sample_bases(opts.seed + 1, opts.bases);
        const auto seeds = oracle::sample_ratios(opts.seed + 2, opts.count, oracle::Regime::mixed);
        const Tetra unit_base = oracle::canonical_base();

        std::vector<SampleOutcome> outcomes(tuples.size());
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const unsigned workers = std::min<std::size_t>(opts.threads == 0 ? hw : opts.threads, tuples.size());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < tuples.size(); i += workers) {
                    const RatioTuple& seed = seeds[i];
                    // Closing the product to exactly 1 puts the tuple on the concurrency boundary.
                    const RatioTuple boundary(seed.x(), seed.y(), seed.z(),
                                              (seed.x() * seed.y() * seed.z()).reciprocal());
                    outcomes[i] = check_sample(bases[i % bases.size()], unit_base, tuples[i], boundary);
                }
            });
        }
        for (auto& th : pool) th.join();

        const auto report = [&](const std::string& name, auto member, bool below_only) {
            std::size_t passed = 0;
            std::size_t total = 0;
            for (const SampleOutcome& o : outcomes) {
                if (below_only && !o.below_one) continue;
                ++total;
                if (o.*member) ++passed;
            }
            const bool ok = passed == total;
            line(out, ok, name, std::to_string(passed) + "/" + std::to_string(total) + " tuples");
            all_ok = all_ok && ok;
        };
        report("oracle_equivalence", &SampleOutcome::oracle_equivalence, false);
        report("section_equivalence", &SampleOutcome::section_equivalence, false);
        report("corner_volumes", &SampleOutcome::corner_volumes, false);
        report("collinearity", &SampleOutcome::collinearity, false);
        report("duality", &SampleOutcome::duality, false);
        report("affine_invariance", &SampleOutcome::affine_invariance, false);
        report("cevian_feet", &SampleOutcome::cevian_feet, false);
        report("decomposition", &SampleOutcome::decomposition, true);
        report("boundary", &SampleOutcome::boundary, false);
    }

    out << (all_ok ? "all checks passed\n" : "verification FAILED\n");
    return all_ok ? 0 : 1;
}

void write_sweep(std::ostream& out, const SweepOptions& opts) {
    if (opts.steps < 2) throw std::invalid_argument("steps must be at least 2");
    if (!(opts.from < opts.to)) throw std::invalid_argument("sweep range needs from < to");
    if (!opts.from.is_positive()) throw std::invalid_argument("sweep values must be positive");
    if (std::string("xyzt").find(opts.vary) == std::string::npos) {
        throw std::invalid_argument("vary must be one of x, y, z, t");
    }

    out << "param,v_klmn,v_pqrs\n";
    const Rational step = (opts.to - opts.from) / Rational(static_cast<long>(opts.steps - 1));
    for (unsigned i = 0; i < opts.steps; ++i) {
        const Rational value = opts.from + step * Rational(static_cast<long>(i));
        std::array<Rational, 4> v{opts.x, opts.y, opts.z, opts.t};
        v[std::string("xyzt").find(opts.vary)] = value;
        const RatioTuple r(v[0], v[1], v[2], v[3]);
        out << dec(value) << ',' << dec(v_klmn_closed(r)) << ',' << dec(v_pqrs_closed(r)) << '\n';
    }
}

}  // namespace routh::cli
