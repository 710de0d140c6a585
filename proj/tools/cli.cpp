// dcl: exact difference Clifford calculus on rational lattices.
//
// Subcommands: apply, decompose, harmonic, kernel, verify, convert, eval,
// list-claims.  Family and mesh are flags; expressions use the grammar
// "X1^(2) e0 + 1/2 X2^(1) e12".

#include "CLI11.hpp"
#include "dcl/claims.hpp"
#include "dcl/fischer.hpp"
#include "dcl/io.hpp"
#include "dcl/operators.hpp"
#include "dcl/polynomial.hpp"

#include <iostream>
#include <sstream>

namespace {

dcl::FamilySign parse_family(const std::string& f) {
    if (f == "-") return dcl::FamilySign::Minus;
    if (f == "+") return dcl::FamilySign::Plus;
    throw CLI::ValidationError("--family", "expected '+' or '-', got '" + f + "'");
}

struct Common {
    int n = 2;
    std::string h_text = "1";
    std::string family_text = "-";
    std::string format = "text";

    dcl::Rational h() const { return dcl::Rational::parse(h_text); }
    dcl::FamilySign family() const { return parse_family(family_text); }
    bool json() const { return format == "json"; }

    void attach(CLI::App* cmd, bool with_n = true) {
        cmd->set_help_flag("--help", "print help");
        if (with_n)
            cmd->add_option("--n", n, "lattice dimension (1..6)")
                ->check(CLI::Range(1, 6));
        cmd->add_option("--h", h_text, "mesh width, a positive rational like 1/2");
        cmd->add_option("--family", family_text, "factorial family: '-' (falling) or '+' (rising)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    }
};

void emit_poly(const dcl::LatticePolynomial& p, const Common& c, std::ostream& os) {
    if (c.json())
        os << dcl::to_json(p).dump(2) << "\n";
    else
        os << dcl::print_polynomial(p) << "\n";
}

std::vector<dcl::Rational> parse_point(const std::string& text, int n) {
    std::vector<dcl::Rational> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(dcl::Rational::parse(item));
    if (static_cast<int>(pt.size()) == 1 && n > 1) pt.assign(static_cast<size_t>(n), pt[0]);
    if (static_cast<int>(pt.size()) != n)
        throw CLI::ValidationError("--at", "expected " + std::to_string(n) +
                                               " comma-separated coordinates");
    return pt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact difference Clifford calculus on rational lattices"};
    app.require_subcommand(1);

    // ---- apply --------------------------------------------------------------
    Common apply_c;
    std::string apply_op, apply_expr;
    auto* apply = app.add_subcommand("apply", "apply a difference operator to a polynomial");
    apply_c.attach(apply);
    apply->add_option("--op", apply_op,
                      "operator name: dh+, dh-, lap, euler+, gamma-, A+, B-, C+, R+:3/2, "
                      "V-:1, J+:2, L+:1,2, d+:1, shift:+1")
        ->required();
    apply->add_option("--expr", apply_expr, "polynomial expression")->required();

    // ---- decompose / harmonic ------------------------------------------------
    Common dec_c;
    std::string dec_expr, dec_strategy = "auto";
    auto* dec = app.add_subcommand("decompose", "Fischer decomposition against the matched Dirac");
    dec_c.attach(dec);
    dec->add_option("--expr", dec_expr, "polynomial expression")->required();
    dec->add_option("--strategy", dec_strategy, "decomposition strategy")
        ->check(CLI::IsMember({"exact", "graded", "auto"}));

    Common harm_c;
    std::string harm_expr, harm_strategy = "auto";
    auto* harm = app.add_subcommand("harmonic", "Fischer decomposition against the star Laplacian");
    harm_c.attach(harm);
    harm->add_option("--expr", harm_expr, "polynomial expression")->required();
    harm->add_option("--strategy", harm_strategy, "decomposition strategy")
        ->check(CLI::IsMember({"exact", "graded", "auto"}));

    // ---- kernel ----------------------------------------------------------------
    Common ker_c;
    int ker_degree = 1;
    std::string ker_kind = "monogenic";
    auto* ker = app.add_subcommand("kernel", "basis of a monogenic or harmonic kernel");
    ker_c.attach(ker);
    ker->add_option("--degree", ker_degree, "homogeneity degree")->check(CLI::Range(0, 8));
    ker->add_option("--kind", ker_kind, "kernel kind")
        ->check(CLI::IsMember({"monogenic", "harmonic"}));

    // ---- verify / list-claims ---------------------------------------------------
    Common ver_c;
    std::string ver_filter;
    std::uint64_t ver_seed = 0;
    auto* ver = app.add_subcommand("verify", "run the claim registry");
    ver_c.attach(ver, /*with_n=*/false);
    ver->add_option("--filter", ver_filter, "claim id or trailing-* glob, e.g. Eq4*");
    ver->add_option("--seed", ver_seed, "seed for the randomized scans");

    Common list_c;
    auto* list = app.add_subcommand("list-claims", "list the claim catalogue");
    list_c.attach(list, /*with_n=*/false);

    // ---- convert -----------------------------------------------------------------
    Common conv_c;
    std::string conv_expr, conv_dir = "to-monomial";
    auto* conv = app.add_subcommand("convert", "expand factorial powers into plain monomial "
                                                "coordinates (or back)");
    conv_c.attach(conv);
    conv->add_option("--expr", conv_expr, "polynomial expression")->required();
    conv->add_option("--direction", conv_dir, "conversion direction")
        ->check(CLI::IsMember({"to-monomial", "to-factorial"}));

    // ---- eval ---------------------------------------------------------------------
    Common eval_c;
    std::string eval_expr, eval_at;
    auto* ev = app.add_subcommand("eval", "evaluate a polynomial at a lattice point");
    eval_c.attach(ev);
    ev->add_option("--expr", eval_expr, "polynomial expression")->required();
    ev->add_option("--at", eval_at, "evaluation point: comma-separated rationals "
                                    "(a single value is broadcast)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*apply) {
            auto op = dcl::DifferenceOperator::parse(apply_op);
            auto p = dcl::parse_polynomial(apply_expr, apply_c.n, apply_c.h(), apply_c.family());
            emit_poly(op.apply(p), apply_c, std::cout);
            return 0;
        }
        if (*dec || *harm) {
            const Common& c = *dec ? dec_c : harm_c;
            const std::string& expr = *dec ? dec_expr : harm_expr;
            const std::string& strategy = *dec ? dec_strategy : harm_strategy;
            auto p = dcl::parse_polynomial(expr, c.n, c.h(), c.family());
            auto res = *dec ? dcl::fischer_decompose_dirac(p, strategy)
                            : dcl::fischer_decompose_laplacian(p, strategy);
            if (c.json()) {
                std::cout << dcl::to_json(res).dump(2) << "\n";
            } else {
                std::cout << "strategy: " << res.strategy
                          << "  feasible: " << (res.feasible ? "yes" : "no") << "\n";
                if (!res.feasible) {
                    std::cout << "diagnostics: " << res.diagnostics << "\n";
                } else {
                    for (size_t s = 0; s < res.components.size(); ++s)
                        std::cout << "component[" << s
                                  << "]: " << dcl::print_polynomial(res.components[s]) << "\n";
                    if (res.residual)
                        std::cout << "residual: " << dcl::print_polynomial(*res.residual) << "\n";
                    std::cout << "kernel_verified: " << (res.kernel_verified ? "yes" : "no")
                              << "\n";
                }
            }
            return res.feasible ? 0 : 1;
        }
        if (*ker) {
            auto kb = ker_kind == "monogenic"
                          ? dcl::monogenic_kernel(ker_degree, ker_c.n, ker_c.h(), ker_c.family())
                          : dcl::harmonic_kernel(ker_degree, ker_c.n, ker_c.h(), ker_c.family());
            if (ker_c.json()) {
                std::cout << dcl::to_json(kb).dump(2) << "\n";
            } else {
                std::cout << ker_kind << " kernel, degree " << ker_degree << ", dimension "
                          << kb.elements.size() << "\n";
                for (const auto& e : kb.elements)
                    std::cout << "  " << dcl::print_polynomial(e) << "\n";
            }
            return 0;
        }
        if (*ver) {
            dcl::RegistryOptions opt;
            opt.filter = ver_filter;
            opt.seed = ver_seed;
            auto rep = dcl::run_registry(opt);
            if (ver_c.json())
                std::cout << rep.json().dump(2) << "\n";
            else
                std::cout << rep.text();
            return rep.exit_code();
        }
        if (*list) {
            if (list_c.json()) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& info : dcl::list_claims())
                    j.push_back({{"id", info.id},
                                 {"statement", info.statement},
                                 {"expectation", dcl::expectation_name(info.expectation)}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& info : dcl::list_claims())
                    std::cout << info.id << "  [" << dcl::expectation_name(info.expectation)
                              << "]  " << info.statement << "\n";
            }
            return 0;
        }
        if (*conv) {
            auto p = dcl::parse_polynomial(conv_expr, conv_c.n, conv_c.h(), conv_c.family());
            // expand each factorial term and re-collect.  "to-monomial" leaves a
            // polynomial whose multi-indices mean plain powers; "to-factorial"
            // interprets the input's indices as plain powers and re-expresses
            // them in the factorial basis.
            dcl::LatticePolynomial out(conv_c.n, conv_c.h(), conv_c.family());
            for (const auto& [alpha, coeff] : p.terms()) {
                auto conv_map = conv_dir == "to-monomial"
                                    ? dcl::factorial_to_monomial(alpha, conv_c.family(), conv_c.h())
                                    : dcl::monomial_to_factorial(alpha, conv_c.family(), conv_c.h());
                for (const auto& [beta, w] : conv_map) out.add_term(beta, w * coeff);
            }
            emit_poly(out, conv_c, std::cout);
            return 0;
        }
        if (*ev) {
            auto p = dcl::parse_polynomial(eval_expr, eval_c.n, eval_c.h(), eval_c.family());
            auto pt = parse_point(eval_at, eval_c.n);
            std::cout << p.evaluate(pt).str() << "\n";
            return 0;
        }
    } catch (const dcl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
