// Command-line driver: generation, verification, confluence sweeps, root
// sets and root-distance bounds, with CSV/JSON/SVG output.

#include "mompoly/calculus.hpp"
#include "mompoly/classical.hpp"
#include "mompoly/confluence.hpp"
#include "mompoly/families.hpp"
#include "mompoly/report_io.hpp"
#include "mompoly/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mompoly;
using nlohmann::json;

namespace {

struct Options {
    std::string family;
    int n = 1;
    std::string alpha = "0";
    std::string beta = "0";
    std::string seq;
    std::string q;
    std::string mu;
    std::string table;
    std::string a0;
    std::string a1;
    std::string params;
    std::string grid;
    std::string format;
    std::string out;
    std::string in;
    std::string f_coeffs;
    std::string g_coeffs;
    double tol = 1e-8;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream stream(s);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
}

MomentSequence make_sequence(const Options& opt) {
    if (opt.seq == "factorial") return MomentSequence::factorial();
    if (opt.seq == "q") {
        if (opt.q.empty()) throw std::invalid_argument("--seq q requires --q");
        return MomentSequence::q_factorial(rational_from_string(opt.q));
    }
    if (opt.seq == "gamma") {
        if (opt.mu.empty()) throw std::invalid_argument("--seq gamma requires --mu");
        return MomentSequence::gamma_power(rational_from_string(opt.mu));
    }
    if (opt.seq == "custom") {
        if (opt.table.empty()) throw std::invalid_argument("--seq custom requires --table");
        std::vector<Scalar> table;
        for (const std::string& v : split(opt.table, ',')) table.push_back(scalar_from_string(v));
        return MomentSequence::custom(std::move(table));
    }
    throw std::invalid_argument("--seq must be one of factorial|q|gamma|custom");
}

FamilySpec make_spec(const Options& opt) {
    FamilySpec spec;
    spec.family = family_from_name(opt.family);
    spec.n = opt.n;
    spec.alpha = Scalar(rational_from_string(opt.alpha));
    spec.beta = Scalar(rational_from_string(opt.beta));
    return spec;
}

GridSpec parse_grid(const std::string& s) {
    GridSpec grid;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &grid.lo, &grid.hi, &grid.count) != 3)
        throw std::invalid_argument("--grid must be lo:hi:count");
    return grid;
}

std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("MOMPOLY_OUT_DIR");
    if (dir && *dir && !path.empty() && path[0] != '/')
        return std::string(dir) + "/" + path;
    return path;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::string path = resolve_out(out);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
}

MomentPolynomial build_from_options(const Options& opt, const MomentSequence& seq) {
    FamilySpec spec = make_spec(opt);
    bool explicit_constants = !opt.a0.empty() || !opt.a1.empty();
    Scalar a0 = opt.a0.empty() ? Scalar(0) : scalar_from_string(opt.a0);
    Scalar a1 = opt.a1.empty() ? Scalar(0) : scalar_from_string(opt.a1);
    switch (spec.family) {
        case Family::Laguerre:
            if (!a1.is_zero()) throw std::invalid_argument("Laguerre has no a1 free constant");
            return build_laguerre(seq, spec.n, spec.alpha, explicit_constants ? a0 : Scalar(1));
        case Family::Bessel:
            if (!a1.is_zero()) throw std::invalid_argument("Bessel has no a1 free constant");
            return build_bessel(seq, spec.n, explicit_constants ? a0 : Scalar(1));
        case Family::Hermite: {
            if (!explicit_constants) return build_hermite(seq, spec.n, Scalar(1));
            bool even = spec.n % 2 == 0;
            const Scalar& seed = even ? a0 : a1;
            const Scalar& other = even ? a1 : a0;
            if (!other.is_zero())
                throw std::invalid_argument(
                    "Hermite free constant does not match the parity of n");
            return build_hermite(seq, spec.n, seed);
        }
        case Family::Jacobi:
            if (!explicit_constants) return build_jacobi(seq, spec.n, spec.alpha, spec.beta);
            return build_jacobi(seq, spec.n, spec.alpha, spec.beta, a0, a1);
    }
    throw std::logic_error("build_from_options: unreachable");
}

json config_block(const Options& opt, const char* subcommand, const MomentSequence* seq) {
    json config;
    config["subcommand"] = subcommand;
    if (!opt.family.empty()) {
        config["family"] = opt.family;
        config["n"] = opt.n;
        config["alpha"] = Scalar(rational_from_string(opt.alpha)).str();
        config["beta"] = Scalar(rational_from_string(opt.beta)).str();
    }
    if (seq) config["sequence"] = sequence_to_json(*seq);
    if (!opt.params.empty()) config["params"] = opt.params;
    if (!opt.grid.empty()) config["grid"] = opt.grid;
    if (!opt.format.empty()) config["format"] = opt.format;
    return config;
}

int run_gen(const Options& opt) {
    MomentSequence seq = make_sequence(opt);
    MomentPolynomial y = build_from_options(opt, seq);
    std::string format = opt.format.empty() ? "text" : opt.format;
    if (format == "json") {
        json j;
        j["config"] = config_block(opt, "gen", &seq);
        if (!opt.a0.empty()) j["config"]["a0"] = opt.a0;
        if (!opt.a1.empty()) j["config"]["a1"] = opt.a1;
        j["moment"] = polynomial_to_json(y, "moment");
        j["standard"] = polynomial_to_json(y, "standard");
        emit(opt.out, j.dump(2) + "\n");
        return 0;
    }
    if (format != "text") throw std::invalid_argument("gen supports --format text|json");
    std::ostringstream text;
    text << "family=" << opt.family << " n=" << opt.n << " alpha="
         << Scalar(rational_from_string(opt.alpha)).str() << " beta="
         << Scalar(rational_from_string(opt.beta)).str() << " sequence="
         << sequence_to_json(seq).dump() << "\n";
    text << "moment:";
    for (const Scalar& a : y.coeffs()) text << ' ' << a.str();
    text << "\nstandard:";
    StandardPolynomial std_y = to_standard(y);
    for (const Scalar& c : std_y.coeffs()) text << ' ' << c.str();
    text << "\n";
    emit(opt.out, text.str());
    return 0;
}

int run_verify(const Options& opt) {
    std::ifstream file(opt.in);
    if (!file) throw std::invalid_argument("cannot read input file: " + opt.in);
    json j = json::parse(file);

    const json& config = j.at("config");
    FamilySpec spec;
    spec.family = family_from_name(config.at("family").get<std::string>());
    spec.n = config.at("n").get<int>();
    spec.alpha = Scalar(rational_from_string(config.at("alpha").get<std::string>()));
    spec.beta = Scalar(rational_from_string(config.at("beta").get<std::string>()));
    MomentPolynomial y = polynomial_from_json(j.at("moment"));
    const MomentSequence& seq = y.sequence();

    double tol = opt.tol;
    if (const char* env = std::getenv("MOMPOLY_TOL"); env && *env && opt.tol == 1e-8)
        tol = std::strtod(env, nullptr);

    StandardPolynomial std_y = to_standard(y);
    double scale = std::max(1.0, max_abs_coeff(std_y));
    double threshold = tol * scale;

    // Route 1: the symbolic moment residual.
    double symbolic = max_abs_coeff(to_standard(apply_equation(build_equation(spec, seq), y)));

    // Route 2: the realized functional equation, when the sequence has one.
    double realized = 0.0;
    std::string realized_name = "none";
    GridSpec grid = opt.grid.empty() ? default_grid(spec.family, seq.kind()) : parse_grid(opt.grid);
    switch (seq.kind()) {
        case MomentSequence::Kind::QFactorial: {
            std::vector<double> xs = grid.points();
            QResidual r = q_residual(spec, seq.param(), std_y, xs);
            realized = r.max();
            realized_name = "q-difference";
            break;
        }
        case MomentSequence::Kind::GammaPower: {
            if (grid.lo < 0.0) grid.lo = 0.0;
            std::vector<double> xs = grid.points();
            realized = fractional_residual(spec, seq.param(), fractionalize(y, seq.param()), xs);
            realized_name = "caputo";
            break;
        }
        case MomentSequence::Kind::Factorial:
            realized = max_abs_coeff(
                classical_residual(spec.family, spec.n, spec.alpha, spec.beta, std_y));
            realized_name = "classical-ode";
            break;
        case MomentSequence::Kind::Custom:
            break; // only the symbolic route exists
    }

    bool pass = symbolic <= threshold && realized <= threshold;
    std::cout << "symbolic moment residual: " << format_float(symbolic) << "\n";
    std::cout << "realized residual (" << realized_name << "): " << format_float(realized)
              << "\n";
    std::cout << "tolerance: " << format_float(threshold) << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_sweep(const Options& opt) {
    if (opt.params.empty()) throw std::invalid_argument("sweep requires --params");
    if (opt.seq != "q" && opt.seq != "gamma")
        throw std::invalid_argument("sweep requires --seq q or --seq gamma");
    FamilySpec spec = make_spec(opt);
    MomentSequence::Kind kind = opt.seq == "q" ? MomentSequence::Kind::QFactorial
                                               : MomentSequence::Kind::GammaPower;
    std::vector<Rational> params;
    for (const std::string& v : split(opt.params, ',')) params.push_back(rational_from_string(v));
    GridSpec grid = opt.grid.empty() ? default_grid(spec.family, kind) : parse_grid(opt.grid);
    if (kind == MomentSequence::Kind::GammaPower && grid.lo < 0.0)
        throw std::invalid_argument("fractional sweep requires a nonnegative grid "
                                    "(offending flag: --grid)");

    SweepResult result = sweep(spec, kind, params, grid);

    std::string format = opt.format.empty() ? "csv" : opt.format;
    if (format == "csv") {
        emit(opt.out, sweep_to_csv(result));
    } else if (format == "json") {
        emit(opt.out, sweep_to_json(result, config_block(opt, "sweep", nullptr)).dump(2) + "\n");
    } else if (format == "svg") {
        emit(opt.out, sweep_to_svg(result));
    } else {
        throw std::invalid_argument("sweep supports --format csv|json|svg");
    }
    if (!opt.out.empty()) {
        for (const SweepRow& row : result.rows)
            std::cout << "param " << Scalar(row.param).str() << ": sup distance "
                      << format_float(row.sup_distance) << "\n";
    }
    return 0;
}

StandardPolynomial parse_coeffs(const std::string& s) {
    std::vector<Scalar> c;
    for (const std::string& v : split(s, ',')) c.push_back(scalar_from_string(v));
    return StandardPolynomial(std::move(c));
}

int run_roots_bound(const Options& opt, bool with_example_bound) {
    StandardPolynomial f, g;
    MomentSequence seq = MomentSequence::factorial();
    bool have_seq = false;
    if (!opt.f_coeffs.empty() || !opt.g_coeffs.empty()) {
        if (opt.f_coeffs.empty() || opt.g_coeffs.empty())
            throw std::invalid_argument("--f and --g must be given together");
        f = parse_coeffs(opt.f_coeffs);
        g = parse_coeffs(opt.g_coeffs);
    } else {
        if (opt.family.empty()) throw std::invalid_argument("give --f/--g or a family config");
        seq = make_sequence(opt);
        have_seq = true;
        FamilySpec spec = make_spec(opt);
        f = to_standard(build_from_options(opt, seq));
        switch (spec.family) {
            case Family::Laguerre: g = classical_laguerre(spec.n, spec.alpha); break;
            case Family::Hermite: g = classical_hermite(spec.n); break;
            case Family::Jacobi: g = classical_jacobi(spec.n, spec.alpha, spec.beta); break;
            case Family::Bessel: g = classical_bessel(spec.n); break;
        }
    }

    BoundReport report;
    try {
        report = root_bound(f, g);
    } catch (const std::logic_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    json j = bound_to_json(report, config_block(opt, with_example_bound ? "bound" : "roots",
                                                have_seq ? &seq : nullptr));
    if (with_example_bound && have_seq && opt.family == "laguerre" && opt.seq == "q" &&
        Scalar(rational_from_string(opt.alpha)).is_zero()) {
        double example = q_laguerre_bound(opt.n, seq.param());
        j["q_laguerre_bound"] = example;
        double rel = std::fabs(example - report.bound) / std::max(report.bound, 1e-300);
        if (rel > 1e-10) {
            std::cerr << "q_laguerre_bound disagrees with the generic bound (relative "
                      << format_float(rel) << ")\n";
            return 1;
        }
    }
    emit(opt.out, j.dump(2) + "\n");
    return 0;
}

void add_family_options(CLI::App* cmd, Options& opt, bool required) {
    auto* fam = cmd->add_option("--family", opt.family, "laguerre|hermite|jacobi|bessel");
    auto* n = cmd->add_option("--n", opt.n, "polynomial degree");
    if (required) {
        fam->required();
        n->required();
    }
    cmd->add_option("--alpha", opt.alpha, "family parameter alpha (rational)");
    cmd->add_option("--beta", opt.beta, "family parameter beta (rational)");
}

void add_sequence_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--seq", opt.seq, "factorial|q|gamma|custom");
    cmd->add_option("--q", opt.q, "q for --seq q (rational, != 1)");
    cmd->add_option("--mu", opt.mu, "mu for --seq gamma (positive rational)");
    cmd->add_option("--table", opt.table, "comma-separated moments for --seq custom");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized moment analogs of the classical orthogonal polynomials"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* gen = app.add_subcommand("gen", "construct a generalized polynomial");
    add_family_options(gen, opt, true);
    add_sequence_options(gen, opt);
    gen->add_option("--a0", opt.a0, "free constant a0");
    gen->add_option("--a1", opt.a1, "free constant a1");
    gen->add_option("--format", opt.format, "text|json");
    gen->add_option("--out", opt.out, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check residuals of a generated polynomial");
    verify->add_option("--in", opt.in, "JSON file produced by gen --format json")->required();
    verify->add_option("--tol", opt.tol, "residual tolerance (default 1e-8)");
    verify->add_option("--grid", opt.grid, "lo:hi:count for the realized residual");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "confluence sweep against the classical polynomial");
    add_family_options(sweep_cmd, opt, true);
    sweep_cmd->add_option("--seq", opt.seq, "q|gamma");
    sweep_cmd->add_option("--params", opt.params, "comma-separated parameter ladder");
    sweep_cmd->add_option("--grid", opt.grid, "lo:hi:count");
    sweep_cmd->add_option("--format", opt.format, "csv|json|svg");
    sweep_cmd->add_option("--out", opt.out, "output path (default stdout)");

    CLI::App* roots = app.add_subcommand("roots", "root sets and matched root distance");
    add_family_options(roots, opt, false);
    add_sequence_options(roots, opt);
    roots->add_option("--f", opt.f_coeffs, "explicit coefficients c0,c1,...");
    roots->add_option("--g", opt.g_coeffs, "explicit coefficients c0,c1,...");
    roots->add_option("--out", opt.out, "output path (default stdout)");

    CLI::App* bound = app.add_subcommand("bound", "root-distance bound report");
    add_family_options(bound, opt, false);
    add_sequence_options(bound, opt);
    bound->add_option("--f", opt.f_coeffs, "explicit coefficients c0,c1,...");
    bound->add_option("--g", opt.g_coeffs, "explicit coefficients c0,c1,...");
    bound->add_option("--out", opt.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(opt);
        if (verify->parsed()) return run_verify(opt);
        if (sweep_cmd->parsed()) return run_sweep(opt);
        if (roots->parsed()) return run_roots_bound(opt, false);
        if (bound->parsed()) return run_roots_bound(opt, true);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
