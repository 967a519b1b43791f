// routh: evaluate, verify and export cevian sections of triangles and tetrahedra.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "routh/oracle.hpp"

namespace {

using routh::Rational;

struct TetArgs {
    std::string x, y, z, t;
    std::vector<std::string> base;
    std::string mesh;
    bool json = false;
};

int cmd_tri(const std::string& x, const std::string& y, const std::string& z) {
    const routh::TriRatios r(Rational::parse(x), Rational::parse(y), Rational::parse(z));
    std::cout << routh::cli::tri_report(r).dump(2) << '\n';
    return 0;
}

int cmd_tet(const TetArgs& args) {
    const routh::RatioTuple r(Rational::parse(args.x), Rational::parse(args.y), Rational::parse(args.z),
                              Rational::parse(args.t));
    const routh::Tetra base = args.base.empty() ? routh::oracle::canonical_base() : routh::cli::parse_base(args.base);
    const routh::TetraSection s = routh::build_tetra_section(base, r);

    if (!args.mesh.empty()) {
        std::ofstream out(args.mesh);
        if (!out) throw std::runtime_error("cannot open mesh file '" + args.mesh + "'");
        routh::cli::write_obj(out, s);
        if (!out) throw std::runtime_error("failed writing mesh file '" + args.mesh + "'");
    }
    if (args.json) {
        std::cout << routh::cli::tet_report(r, s).dump(2) << '\n';
    } else {
        std::cout << routh::cli::tet_text(r, s);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cevian sections of triangles and tetrahedra"};
    app.require_subcommand(1);

    std::string tx, ty, tz;
    auto* tri = app.add_subcommand("tri", "Triangle cevian areas as JSON");
    tri->add_option("x", tx, "|AM|/|MB|")->required();
    tri->add_option("y", ty, "|BK|/|KC|")->required();
    tri->add_option("z", tz, "|CL|/|LA|")->required();

    TetArgs tet_args;
    auto* tet = app.add_subcommand("tet", "Tetrahedron section: points, volumes, predicates");
    tet->add_option("x", tet_args.x, "|CK|/|KD|")->required();
    tet->add_option("y", tet_args.y, "|DL|/|LA|")->required();
    tet->add_option("z", tet_args.z, "|AM|/|MB|")->required();
    tet->add_option("t", tet_args.t, "|BN|/|NC|")->required();
    tet->add_option("--base", tet_args.base, "12 coordinates: A B C D (default unit corner simplex)")
        ->expected(12);
    tet->add_option("--mesh", tet_args.mesh, "Write an OBJ mesh of the section");
    tet->add_flag("--json", tet_args.json, "Emit the full report as JSON");

    routh::cli::VerifyOptions vopts;
    std::vector<std::string> numeric_args;
    bool verify_all = false;
    std::string mutation;
    auto* verify = app.add_subcommand("verify", "Symbolic identities and randomized oracle checks");
    verify->add_flag("--symbolic", vopts.symbolic, "Prove the tiling identities as rational functions");
    verify->add_option("--numeric", numeric_args, "SEED COUNT: compare closed forms to the coordinate oracle")
        ->expected(2);
    verify->add_flag("--all", verify_all, "Symbolic plus numeric with seed 42, count 100");
    verify->add_option("--bases", vopts.bases, "Number of random affine bases")->check(CLI::PositiveNumber);
    verify->add_option("--threads", vopts.threads, "Worker threads (0 = hardware)");
    verify->add_option("--mutate", mutation, "Corrupt one symbolic term to exercise the harness")
        ->check(CLI::IsMember({"flip-sign", "perturb-denominator"}));

    routh::cli::SweepOptions sopts;
    std::string vary, from, to, fx = "1", fy = "1", fz = "1", ft = "1";
    auto* sweep = app.add_subcommand("sweep", "CSV of both volumes while one ratio varies");
    sweep->add_option("--vary", vary, "Which ratio to vary")->required()->check(CLI::IsMember({"x", "y", "z", "t"}));
    sweep->add_option("--from", from, "Start value")->required();
    sweep->add_option("--to", to, "End value")->required();
    sweep->add_option("--steps", sopts.steps, "Number of rows (>= 2)")->required();
    sweep->add_option("--x", fx, "Fixed x");
    sweep->add_option("--y", fy, "Fixed y");
    sweep->add_option("--z", fz, "Fixed z");
    sweep->add_option("--t", ft, "Fixed t");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tri) return cmd_tri(tx, ty, tz);
        if (*tet) return cmd_tet(tet_args);
        if (*verify) {
            if (!numeric_args.empty()) {
                vopts.numeric = true;
                vopts.seed = std::stoull(numeric_args[0]);
                vopts.count = std::stoull(numeric_args[1]);
            }
            if (verify_all) {
                vopts.symbolic = true;
                vopts.numeric = true;
            }
            if (!vopts.symbolic && !vopts.numeric) {
                std::cerr << "verify: choose --symbolic, --numeric SEED COUNT, or --all\n";
                return 2;
            }
            if (mutation == "flip-sign") vopts.mutation = routh::Mutation::flip_sign;
            if (mutation == "perturb-denominator") vopts.mutation = routh::Mutation::perturb_denominator;
            return routh::cli::run_verify(vopts, std::cout);
        }
        if (*sweep) {
            sopts.vary = vary.front();
            sopts.from = Rational::parse(from);
            sopts.to = Rational::parse(to);
            sopts.x = Rational::parse(fx);
            sopts.y = Rational::parse(fy);
            sopts.z = Rational::parse(fz);
            sopts.t = Rational::parse(ft);
            routh::cli::write_sweep(std::cout, sopts);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
