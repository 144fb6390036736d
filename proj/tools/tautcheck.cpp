// tautcheck: command-line front end to the divisor, lattice, Schubert and
// quadratic-complex computations, plus the full verification run.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tautcheck/curves.hpp"
#include "tautcheck/error.hpp"
#include "tautcheck/lattice.hpp"
#include "tautcheck/picard.hpp"
#include "tautcheck/quadratic.hpp"
#include "tautcheck/report_json.hpp"
#include "tautcheck/schubert.hpp"
#include "tautcheck/verify.hpp"

using namespace tautcheck;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct PairOptions {
    std::string curve;
    std::optional<int> genus;
    std::string divisor;
    std::optional<int> param;
};

struct ClassOptions {
    std::string space;
    int genus = 0;
    std::string name;
    std::optional<int> param;
};

struct LatticeOptions {
    std::string name;
    int genus = 7;
    long scale = -1;
    std::string check;
    int a_bound = 5;
};

struct SchubertOptions {
    int n = 0;
    std::string expr;
    bool degree = false;
};

struct ComplexOptions {
    std::string op;
    std::string input;
};

struct VerifyOptions {
    bool json = false;
    std::uint64_t seed = default_seed;
};

void fixed_genus(const std::optional<int>& genus, int expected, const std::string& curve)
{
    if (genus && *genus != expected)
        throw Error(ErrorCode::BadGenus, curve + " lives in genus " + std::to_string(expected));
}

CurveClass make_curve(const PairOptions& o)
{
    if (o.curve == "xi") {
        if (!o.genus)
            throw Error(ErrorCode::BadParam, "--genus is required for xi");
        return xi_curve(*o.genus);
    }
    if (o.curve == "gamma") {
        if (!o.genus)
            throw Error(ErrorCode::BadParam, "--genus is required for gamma");
        return gamma_curve(*o.genus);
    }
    if (o.curve == "r") {
        fixed_genus(o.genus, 8, "r");
        return r_curve_g8();
    }
    if (o.curve == "septic") {
        fixed_genus(o.genus, 8, "septic");
        return septic_pencil_curve();
    }
    if (o.curve == "btilde") {
        fixed_genus(o.genus, 8, "btilde");
        return btilde_curve(septic_pencil_curve());
    }
    throw Error(ErrorCode::BadParam, "unknown curve '" + o.curve + "'");
}

/// A named class, or a single basis symbol of the target space. Classes on
/// Mbar are pulled back when the target is a Prym or spin space.
DivisorClass resolve_divisor(const std::string& name, const ModuliSpaceId& space, std::optional<int> param)
{
    if (space.find(name))
        return class_of(space, {{name, 1}});
    DivisorClass d = named_divisor(name, space.genus(), param, space.kind());
    if (d.space().kind() == SpaceKind::Mbar && space.kind() == SpaceKind::Rbar)
        return pullback_to_prym(d);
    if (d.space().kind() == SpaceKind::Mbar && space.kind() == SpaceKind::SbarPlus)
        return pullback_to_spin(d);
    return d;
}

SpaceKind parse_space(const std::string& s)
{
    if (s == "mbar")
        return SpaceKind::Mbar;
    if (s == "rbar")
        return SpaceKind::Rbar;
    if (s == "spin")
        return SpaceKind::SbarPlus;
    throw Error(ErrorCode::BadParam, "unknown space '" + s + "'");
}

int run_pair(const PairOptions& o)
{
    auto curve = make_curve(o);
    auto d = resolve_divisor(o.divisor, curve.space(), o.param);
    std::cout << to_string(pair(curve, d)) << "\n";
    return exit_ok;
}

int run_class(const ClassOptions& o)
{
    ModuliSpaceId space(parse_space(o.space), o.genus);
    std::cout << resolve_divisor(o.name, space, o.param).to_string() << "\n";
    return exit_ok;
}

void print_gram(const IntegerLattice& lat)
{
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        std::cout << lat.names()[i] << ":";
        for (std::size_t j = 0; j < lat.rank(); ++j)
            std::cout << " " << lat.gram()(i, j).get_str();
        std::cout << "\n";
    }
    std::cout << "det " << to_string(lat.determinant()) << ", " << (lat.is_even() ? "even" : "odd") << "\n";
}

int run_lattice(const LatticeOptions& o)
{
    if (o.check == "identities") {
        bool ok = true;
        for (const auto& id : lambda_identities(o.genus)) {
            std::cout << id.name << " = " << to_string(id.computed) << (id.holds() ? "" : "  MISMATCH") << "\n";
            ok = ok && id.holds();
        }
        return ok ? exit_ok : exit_failed;
    }
    if (o.check == "cs") {
        auto cert = cs_obstruction(o.genus, o.a_bound);
        for (const auto& e : cert.entries)
            std::cout << "a=" << e.a << " sum=" << e.sum << " norm=" << e.norm << " gap=" << to_string(e.gap)
                      << " bound=" << e.search_bound << " solutions=" << e.solutions << "\n";
        std::cout << (cert.passed() ? "certificate passes" : "certificate FAILS") << "\n";
        return cert.passed() ? exit_ok : exit_failed;
    }
    if (o.check == "doubly-elliptic") {
        auto r = doubly_elliptic_identities();
        std::cout << "(2E + sum Gamma_i)^2 = " << to_string(r.curve_norm) << "\n"
                  << "(C1 + C2)^2 = " << to_string(r.elliptic_sum_norm) << "\n"
                  << "C1.C2 = " << to_string(r.elliptic_product) << "\n";
        return r.passed() ? exit_ok : exit_failed;
    }
    if (!o.check.empty())
        throw Error(ErrorCode::BadParam, "unknown check '" + o.check + "'");

    if (o.name == "nikulin")
        print_gram(nikulin_lattice());
    else if (o.name == "lambda_g")
        print_gram(lambda_g(o.genus));
    else if (o.name == "u")
        print_gram(hyperbolic_u());
    else if (o.name == "e8")
        print_gram(e8(o.scale));
    else
        throw Error(ErrorCode::BadParam, "unknown lattice '" + o.name + "'");
    return exit_ok;
}

int run_schubert(const SchubertOptions& o)
{
    auto cycle = parse_schubert(o.n, o.expr);
    if (o.degree)
        std::cout << to_string(degree(cycle)) << "\n";
    else
        std::cout << cycle.to_string() << "\n";
    return exit_ok;
}

// Input: first line dim, then dim matrix rows, then optional vectors, one per line.
struct ComplexInput {
    RationalMatrix matrix;
    std::vector<RationalVector> vectors;
};

RationalVector parse_row(const std::string& line, std::size_t dim)
{
    std::istringstream in(line);
    RationalVector row;
    std::string tok;
    while (in >> tok)
        row.push_back(parse_rational(tok));
    if (row.size() != dim)
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(dim) + " entries in '" + line + "'");
    return row;
}

ComplexInput read_complex_input(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) {
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    if (lines.empty())
        throw Error(ErrorCode::ParseError, "empty input");
    long dim = std::stol(lines[0]);
    if (dim <= 0 || lines.size() < std::size_t(dim) + 1)
        throw Error(ErrorCode::ParseError, "need a positive dim and that many matrix rows");
    ComplexInput out{RationalMatrix(dim, dim), {}};
    for (long i = 0; i < dim; ++i) {
        auto row = parse_row(lines[i + 1], dim);
        for (long j = 0; j < dim; ++j)
            out.matrix(i, j) = row[j];
    }
    for (std::size_t k = dim + 1; k < lines.size(); ++k)
        out.vectors.push_back(parse_row(lines[k], dim));
    return out;
}

int run_complex(const ComplexOptions& o)
{
    auto in = read_complex_input(o.input);
    auto need_vectors = [&] {
        if (in.vectors.size() != 2)
            throw Error(ErrorCode::ParseError, o.op + " needs two vectors u and v after the matrix");
    };
    if (o.op == "compound") {
        SymmetricForm q(in.matrix);
        std::cout << "rank " << q.rank() << ", compound rank " << second_compound(q).rank() << "\n";
    } else if (o.op == "tangency") {
        need_vectors();
        std::cout << (tangency(SymmetricForm(in.matrix), in.vectors[0], in.vectors[1]) ? "tangent" : "not tangent")
                  << "\n";
    } else if (o.op == "singular") {
        need_vectors();
        std::cout << (is_singular_point(SymmetricForm(in.matrix), in.vectors[0], in.vectors[1]) ? "singular"
                                                                                                 : "smooth")
                  << "\n";
    } else if (o.op == "plucker-rank") {
        auto psi = bivector_from_skew(in.matrix);
        std::cout << plucker_quadric_rank(psi) << "\n";
    } else {
        throw Error(ErrorCode::BadParam, "unknown op '" + o.op + "'");
    }
    return exit_ok;
}

int run_verify(const VerifyOptions& o)
{
    auto report = verify_all({}, o.seed);
    if (o.json)
        std::cout << render_json(report) << "\n";
    else
        std::cout << render_text(report);
    return report.ok() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact intersection-theory checks on moduli of Prym and spin curves"};
    app.require_subcommand(1);

    PairOptions pair_opts;
    auto* pair_cmd = app.add_subcommand("pair", "Intersection number of a test curve with a divisor");
    pair_cmd->add_option("--curve", pair_opts.curve, "xi | gamma | r | septic | btilde")->required();
    pair_cmd->add_option("--genus", pair_opts.genus);
    pair_cmd->add_option("--divisor", pair_opts.divisor, "named class or basis symbol")->required();
    pair_cmd->add_option("--param", pair_opts.param, "i for prym_green / hodge_c1");

    ClassOptions class_opts;
    auto* class_cmd = app.add_subcommand("class", "Print a divisor class");
    class_cmd->add_option("--space", class_opts.space, "mbar | rbar | spin")->required();
    class_cmd->add_option("--genus", class_opts.genus)->required();
    class_cmd->add_option("--name", class_opts.name)->required();
    class_cmd->add_option("--param", class_opts.param);

    LatticeOptions lattice_opts;
    auto* lattice_cmd = app.add_subcommand("lattice", "Gram matrices and lattice checks");
    lattice_cmd->add_option("--name", lattice_opts.name, "nikulin | lambda_g | u | e8");
    lattice_cmd->add_option("--genus", lattice_opts.genus);
    lattice_cmd->add_option("--scale", lattice_opts.scale, "e8 scale, default -1");
    lattice_cmd->add_option("--check", lattice_opts.check, "identities | cs | doubly-elliptic");
    lattice_cmd->add_option("--a-bound", lattice_opts.a_bound);

    SchubertOptions schubert_opts;
    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert calculus on G(2,n)");
    schubert_cmd->add_option("--n", schubert_opts.n)->required();
    schubert_cmd->add_option("--expr", schubert_opts.expr)->required();
    schubert_cmd->add_flag("--degree", schubert_opts.degree);

    ComplexOptions complex_opts;
    auto* complex_cmd = app.add_subcommand("complex", "Quadratic line complex predicates");
    complex_cmd->add_option("--op", complex_opts.op, "compound | tangency | singular | plucker-rank")->required();
    complex_cmd->add_option("--input", complex_opts.input)->required()->check(CLI::ExistingFile);

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify-all", "Run every check");
    verify_cmd->add_flag("--json", verify_opts.json);
    verify_cmd->add_option("--seed", verify_opts.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (pair_cmd->parsed())
            return run_pair(pair_opts);
        if (class_cmd->parsed())
            return run_class(class_opts);
        if (lattice_cmd->parsed())
            return run_lattice(lattice_opts);
        if (schubert_cmd->parsed())
            return run_schubert(schubert_opts);
        if (complex_cmd->parsed())
            return run_complex(complex_opts);
        if (verify_cmd->parsed())
            return run_verify(verify_opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
