#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "witt/algebras.hpp"
#include "witt/envelope.hpp"
#include "witt/hilbert.hpp"
#include "witt/morphism.hpp"
#include "witt/parser.hpp"
#include "witt/veritas.hpp"

namespace {

using witt::Mode;
using witt::Rational;
using witt::RatFunc;

// --a accepts `generic` or a rational literal p/q
struct ParamArg {
    bool generic = true;
    Rational value;
};

ParamArg parse_param(const std::string& s) {
    if (s == "generic") return {};
    long num = 0, den = 1;
    size_t slash = s.find('/');
    try {
        num = std::stol(slash == std::string::npos ? s : s.substr(0, slash));
        if (slash != std::string::npos) den = std::stol(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--a", "expected `generic` or a rational literal p/q");
    }
    if (den == 0) throw CLI::ValidationError("--a", "zero denominator");
    return {false, Rational(witt::Int(num), witt::Int(den))};
}

Mode parse_mode(const std::string& s) {
    if (s == "wplus") return Mode::WPlus;
    if (s == "witt") return Mode::Witt;
    throw CLI::ValidationError("--mode", "expected wplus or witt");
}

template <typename K>
int run_kernel(const std::string& map, const K& a, int degree) {
    if (map == "phi") {
        auto S = witt::make_S<K>();
        witt::EnvMorphism<K> phi(witt::MorphName::Phi, S);
        auto rep = witt::kernel_at_degree(phi, degree);
        std::cout << "dim (ker phi)_" << degree << " = " << rep.dimension() << "\n";
        for (const auto& f : rep.basis) std::cout << "  " << f.str() << "\n";
        return 0;
    }
    auto R = witt::make_R<K>();
    witt::EnvMorphism<K> lam(witt::MorphName::Lambda, R, Mode::WPlus, a);
    auto rep = witt::kernel_at_degree(lam, degree);
    std::cout << "dim (ker lambda_a)_" << degree << " = " << rep.dimension() << "\n";
    for (const auto& f : rep.basis) std::cout << "  " << f.str() << "\n";
    if (!rep.excluded.empty()) {
        std::cout << "excluded specializations:";
        for (const auto& s : rep.excluded) std::cout << " {" << s << "}";
        std::cout << "\n";
    }
    return 0;
}

template <typename K>
int run_eval(const std::string& map, const K& a, const std::string& expr) {
    witt::EnvElement<K> f = witt::parse_env<K>(expr);
    if (map == "phi") {
        auto S = witt::make_S<K>();
        witt::EnvMorphism<K> phi(witt::MorphName::Phi, S);
        std::cout << witt::eval_morphism(phi, f).str() << "\n";
    } else {
        auto R = witt::make_R<K>();
        witt::EnvMorphism<K> lam(witt::MorphName::Lambda, R, Mode::WPlus, a);
        std::cout << witt::eval_morphism(lam, f).str() << "\n";
    }
    return 0;
}

int emit_report(const witt::Report& rep, const std::string& format, const std::string& out) {
    std::string text = format == "json" ? rep.to_json().dump(2) + "\n" : rep.render_table();
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 2;
        }
        f << text;
    }
    if (!rep.all_pass()) {
        for (const auto& c : rep.claims)
            if (c.status == "fail" || c.status == "error")
                std::cerr << c.id << " " << c.status << ": " << c.computed << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for maps from the enveloping algebra of the positive Witt "
                 "algebra into twisted polynomial rings"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run registered claims and emit a report");
    std::vector<std::string> ids;
    verify->add_option("ids", ids, "claim ids, or `all` (default)");
    std::string format = "table", out_path;
    int max_degree = 0;
    bool no_witt = false, list_only = false;
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--max-degree", max_degree, "truncate degreewise checks")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--no-witt", no_witt, "skip claims needing Laurent (WITT) mode");
    verify->add_flag("--list", list_only, "list claim ids and exit");

    // kernel
    auto* kernel = app.add_subcommand("kernel", "kernel of phi or lambda_a at one degree");
    std::string k_map = "lambda", k_a = "generic";
    int k_degree = 0;
    kernel->add_option("--map", k_map)->check(CLI::IsMember({"lambda", "phi"}));
    kernel->add_option("--a", k_a, "`generic` or a rational p/q");
    kernel->add_option("--degree", k_degree)->required()->check(CLI::PositiveNumber);

    // hilbert
    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of a named family");
    std::string h_label = "B", h_closed;
    int h_N = 20;
    hilbert->add_option("--label", h_label,
                        "one of B, Q, R, S, A(0), A(1), A(a), I, M, M', ker phi, ker lambda");
    hilbert->add_option("--max-degree", h_N)->check(CLI::PositiveNumber);
    hilbert->add_option("--closed", h_closed, "closed form to compare, e.g. t^4/((1-t)^2*(1-t^2))");

    // eval
    auto* eval = app.add_subcommand("eval", "apply phi or lambda_a to an expression in the e_n");
    std::string e_map = "phi", e_a = "generic", e_expr;
    eval->add_option("--map", e_map)->check(CLI::IsMember({"lambda", "phi"}));
    eval->add_option("--a", e_a);
    eval->add_option("--expr", e_expr)->required();

    // straighten
    auto* straighten = app.add_subcommand("straighten", "PBW normal form of an expression");
    std::string s_expr, s_mode = "wplus";
    straighten->add_option("--expr", s_expr)->required();
    straighten->add_option("--mode", s_mode)->check(CLI::IsMember({"wplus", "witt"}));

    // adpow
    auto* adpow = app.add_subcommand("adpow", "iterated commutator ad(x)^k (y)");
    std::string a_x, a_y, a_mode = "witt";
    int a_k = 1;
    adpow->add_option("--x", a_x)->required();
    adpow->add_option("--k", a_k)->required()->check(CLI::NonNegativeNumber);
    adpow->add_option("--y", a_y)->required();
    adpow->add_option("--mode", a_mode)->check(CLI::IsMember({"wplus", "witt"}));

    // nonfg, geom: shorthands for the matching claim groups
    app.add_subcommand("nonfg", "run the non-noetherian witness checks");
    app.add_subcommand("geom", "run the projective-geometry checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (list_only) {
                for (const auto& spec : witt::all_claims()) std::cout << spec.id << "\n";
                return 0;
            }
            witt::VerifyConfig cfg;
            cfg.max_degree = max_degree;
            cfg.include_witt = !no_witt;
            if (!(ids.empty() || (ids.size() == 1 && ids[0] == "all"))) cfg.only = ids;
            return emit_report(witt::make_report(cfg), format, out_path);
        }
        if (kernel->parsed()) {
            ParamArg a = parse_param(k_a);
            if (k_map == "phi" || !a.generic)
                return run_kernel<Rational>(k_map, a.value, k_degree);
            return run_kernel<RatFunc>(k_map, RatFunc::param(), k_degree);
        }
        if (hilbert->parsed()) {
            auto measured = witt::measure(h_label, h_N);
            std::cout << "hilb " << h_label << ":";
            for (const auto& c : measured.coeffs) std::cout << " " << c.str();
            std::cout << "\n";
            if (!h_closed.empty()) {
                auto verdict =
                    witt::compare(measured, witt::RationalSeries::parse(h_closed));
                if (!verdict.match) {
                    std::cout << "mismatch with " << h_closed << " at degree "
                              << verdict.first_mismatch << "\n";
                    return 1;
                }
                std::cout << "matches " << h_closed << " through degree " << h_N << "\n";
            }
            return 0;
        }
        if (eval->parsed()) {
            ParamArg a = parse_param(e_a);
            if (e_map == "phi" || !a.generic) return run_eval<Rational>(e_map, a.value, e_expr);
            return run_eval<RatFunc>(e_map, RatFunc::param(), e_expr);
        }
        if (straighten->parsed()) {
            std::cout << witt::parse_env<Rational>(s_expr, parse_mode(s_mode)).str() << "\n";
            return 0;
        }
        if (adpow->parsed()) {
            Mode mode = parse_mode(a_mode);
            auto x = witt::parse_env<Rational>(a_x, mode);
            auto y = witt::parse_env<Rational>(a_y, mode);
            std::cout << witt::ad_power(x, a_k, y).str() << "\n";
            return 0;
        }
        witt::VerifyConfig cfg;
        if (app.get_subcommand("nonfg")->parsed())
            cfg.only = {"thm-3-3-witness"};
        else
            cfg.only = {"geom-Ca", "geom-f", "geom-ia-square", "geom-psi-square"};
        return emit_report(witt::make_report(cfg), "table", "");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
