#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "surgtri/counting.hpp"
#include "surgtri/curve_gen.hpp"
#include "surgtri/dedekind.hpp"
#include "surgtri/floer.hpp"
#include "surgtri/invariants.hpp"
#include "surgtri/io.hpp"
#include "surgtri/svg.hpp"
#include "surgtri/triangles.hpp"

namespace {

using namespace surgtri;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPreconditionError = 3;

bool use_color() { return std::getenv("NO_COLOR") == nullptr; }

std::string pass_fail(bool ok) {
    if (!use_color()) return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string show(const Rat& r) {
    if (r.is_integer()) return r.str();
    std::ostringstream ss;
    ss << r.str() << " (approx " << r.approx() << ")";
    return ss.str();
}

int cmd_dedekind(long long p, long long q) {
    try {
        const Rat s = dedekind_sum(p, q);
        std::cout << "s(" << p << "," << q << ") = " << show(s) << "\n";
        return kExitOk;
    } catch (const precondition_error& e) {
        std::cerr << "p and q must be coprime positive integers: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_casson_walker(const std::string& input, const std::string& output) {
    const auto problem = parse_surgery(read_file(input));
    const Rat lambda_bar = casson_walker_surgery(problem);
    const Rat s = s_pqn(problem.p, problem.q, problem.n);
    const Int h1_pq = problem.p * problem.h1_order;
    const Rat lambda = Rat(2) * lambda_bar / Rat(h1_pq);

    std::ostringstream out;
    out << "surgery: " << problem.p.str() << "/" << problem.q.str() << " on a knot of order "
        << problem.n << " in Y with |H1(Y)| = " << problem.h1_order.str() << "\n";
    out << "lambda_bar(Y_pq) = " << show(lambda_bar) << "\n";
    out << "lambda(Y_pq)     = " << show(lambda)
        << "   [via |H1(Y_pq)| = p|H1(Y)| = " << h1_pq.str() << "]\n";
    out << "s(p,q,n)         = " << show(s) << "\n";
    out << "breakdown:\n";
    out << "  p * lambda_bar(Y)   = " << show(Rat(problem.p) * problem.lambda_bar_y) << "\n";
    out << "  q * sum a_j j^2     = "
        << show(Rat(problem.q) * Rat(alexander_moment(problem.alexander))) << "\n";
    out << "  |H1(Y)| * s(p,q,n)  = " << show(Rat(problem.h1_order) * s) << "\n";
    std::cout << out.str();
    if (!output.empty()) write_file(output, out.str());
    return kExitOk;
}

int cmd_spinc(const std::string& base, int n, long long p, long long q) {
    BaseManifold manifold;
    if (base == "y") manifold = BaseManifold::Y;
    else if (base == "y1") manifold = BaseManifold::Y1;
    else if (base == "y0") manifold = BaseManifold::Y0;
    else if (base == "ypq") manifold = BaseManifold::Ypq;
    else {
        std::cerr << "base must be one of y, y1, y0, ypq\n";
        return kExitInputError;
    }
    const auto fam = enumerate_spinc(manifold, n, p, q);
    if (fam.shape == FamilyShape::Integers) {
        std::cout << "Z-family of spin-c structures sigma (x) L_k, k in Z\n";
    } else {
        std::cout << "Z_" << fam.order.str() << "-family of spin-c structures: labels";
        for (const auto& k : fam.labels) std::cout << " L_" << k.str();
        std::cout << "\n";
    }
    return kExitOk;
}

CurveFile curve_from_cli(const std::string& input, std::uint64_t seed, int n, int m, int p,
                         const std::string& eps, const std::string& eta, int arcs, int loops,
                         int bad_arcs, long long sp, long long sq, bool triangle_kind) {
    if (!input.empty())
        return triangle_kind ? parse_triangle_config(read_file(input))
                             : parse_curve(read_file(input));
    CurveFile file;
    CurveGenParams params;
    params.n = n;
    params.u_sigma = Rat(0);
    params.arcs = arcs;
    params.loops = loops;
    params.bad_arcs = bad_arcs;
    params.seed = seed;
    file.config.curve = random_boundary_curve(params);
    file.config.n = n;
    file.config.m = m;
    file.config.p = p;
    file.config.eps = Rat::parse(eps);
    file.config.eta = Rat::parse(eta);
    if (sp != 0) file.surgery = {Int(sp), Int(sq)};
    return file;
}

int cmd_verify_partition(const CurveFile& file, const std::string& output) {
    const auto& cfg = file.config;
    std::ostringstream out;
    bool ok = true;

    const auto rep = partition_check(cfg.curve, cfg.n, cfg.m, cfg.p, cfg.eps, cfg.eta);
    int y0_total = 0;
    for (const auto& [k, v] : rep.count_y0) y0_total += v;
    out << "partition (n=" << cfg.n << ", m=" << cfg.m << ", p=" << cfg.p << "):\n";
    out << "  count_Y  = " << rep.count_y << "\n";
    out << "  count_Y1 = " << rep.count_y1 << "\n";
    for (const auto& [k, v] : rep.count_y0)
        out << "  count_Y0[k=" << k.str() << "] = " << v << "\n";
    out << "  identity count_Y = count_Y1 + sum count_Y0: " << pass_fail(rep.identity_holds)
        << "\n";
    out << "  matched crossings: " << rep.matching.size() << ", stable for eps <= "
        << rep.stability_eps.str() << "\n";
    ok = ok && rep.identity_holds;

    if (file.expected_count_y && *file.expected_count_y != rep.count_y) {
        out << "  expected count_Y = " << *file.expected_count_y << ": " << pass_fail(false)
            << "\n";
        ok = false;
    }
    if (file.expected_count_y1 && *file.expected_count_y1 != rep.count_y1) {
        out << "  expected count_Y1 = " << *file.expected_count_y1 << ": " << pass_fail(false)
            << "\n";
        ok = false;
    }
    if (file.expected_count_y0_total && *file.expected_count_y0_total != y0_total) {
        out << "  expected count_Y0 total = " << *file.expected_count_y0_total << ": "
            << pass_fail(false) << "\n";
        ok = false;
    }

    if (file.surgery) {
        const auto idrep = surgery_count_identity(cfg.curve, file.surgery->first,
                                                  file.surgery->second, cfg.n,
                                                  cfg.curve.u_sigma, cfg.eta);
        out << "surgery counting identity (p/q = " << file.surgery->first.str() << "/"
            << file.surgery->second.str() << "):\n";
        out << "  lhs (p/q-curve count)      = " << idrep.lhs << "\n";
        out << "  p * count(v=0)             = " << file.surgery->first.str() << " * "
            << idrep.count_y << "\n";
        out << "  q * count(u=u_sigma+eta)   = " << file.surgery->second.str() << " * "
            << idrep.count_y0 << "\n";
        out << "  sum_i SF[theta_0,theta_i]  = " << idrep.sf_total << "\n";
        out << "  staircase route            = " << idrep.staircase_total << "\n";
        if (idrep.bad_sign_total != 0)
            out << "  bad-point correction       = " << idrep.bad_multiplicity << " * "
                << idrep.bad_sign_total << "\n";
        out << "  spectral-flow routes agree: " << pass_fail(idrep.routes_agree) << "\n";
        out << "  identity holds: " << pass_fail(idrep.identity_holds) << "\n";
        ok = ok && idrep.routes_agree && idrep.identity_holds;
    }

    std::cout << out.str();
    if (!output.empty()) write_file(output, out.str());
    return ok ? kExitOk : kExitIdentityFailure;
}

int cmd_triangles(const CurveFile& file, const std::string& output) {
    const auto rep = w1_w0_cancellation(file.config);
    std::ostringstream out;
    const auto print_matrix = [&out](const std::string& name,
                                     const std::vector<std::vector<int>>& m) {
        out << name << " (" << m.size() << " x " << (m.empty() ? 0 : m[0].size()) << "):\n";
        for (const auto& row : m) {
            out << "  [";
            for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << "]\n";
        }
    };
    print_matrix("w1", rep.w1);
    print_matrix("w0", rep.w0);
    print_matrix("w0 . w1", rep.product);
    out << "sign-reversing bijection pairs: " << rep.pairs.size() << "\n";
    for (const auto& u : rep.unmatched) out << "  unmatched: " << u << "\n";
    out << "w0 . w1 = 0: " << pass_fail(rep.product_zero) << "\n";
    out << "cancellation certificate: " << pass_fail(rep.ok) << "\n";
    std::cout << out.str();
    if (!output.empty()) write_file(output, out.str());
    return rep.ok ? kExitOk : kExitIdentityFailure;
}

int cmd_exactness(const std::string& input, const std::string& output) {
    const auto file = parse_complex(read_file(input));
    const auto rep = exact_triangle_check(file.y1, file.y, file.y0, file.w1, file.w0, file.delta);
    if (!rep.chain_maps_ok) {
        for (const auto& f : rep.failures) std::cerr << f << "\n";
        return kExitPreconditionError;
    }
    std::ostringstream out;
    const auto summarize = [&out](const std::string& name, const GradedComplex& c) {
        out << "  H(" << name << "):";
        const auto hs = homology(c);
        if (hs.empty()) out << " 0";
        for (const auto& h : hs) {
            out << "  deg " << h.degree << ": Z^" << h.betti;
            for (const auto& t : h.torsion) out << " + Z/" << t.str();
        }
        out << "\n";
    };
    out << "homology of the three complexes:\n";
    summarize("Y1", file.y1);
    summarize("Y", file.y);
    summarize("sum Y0", direct_sum(file.y0));
    out << "generator-level short exactness: " << pass_fail(rep.generator_level_exact) << "\n";
    out << "exact at H(Y1): " << pass_fail(rep.exact_at_y1) << "\n";
    out << "exact at H(Y):  " << pass_fail(rep.exact_at_y) << "\n";
    out << "exact at H(Y0): " << pass_fail(rep.exact_at_y0) << "\n";
    out << "connecting map matches the snake construction: " << pass_fail(rep.snake_agrees)
        << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
    std::cout << out.str();
    if (!output.empty()) write_file(output, out.str());
    return rep.all_ok() ? kExitOk : kExitIdentityFailure;
}

int cmd_render(const std::string& input, const std::string& output) {
    const auto file = parse_triangle_config(read_file(input));
    const std::string svg = render_svg(file);
    if (output.empty()) {
        std::cout << svg;
    } else {
        write_file(output, svg);
        std::cout << "wrote " << output << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-torus surgery calculus"};
    app.require_subcommand(1);

    long long ded_p = 0, ded_q = 0;
    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(p,q)");
    dedekind->add_option("p", ded_p)->required();
    dedekind->add_option("q", ded_q)->required();

    std::string input, output;
    auto* cw = app.add_subcommand("casson-walker", "Casson-Walker surgery formula");
    cw->add_option("--input", input)->required();
    cw->add_option("--output", output);

    std::string spinc_base;
    int spinc_n = 1;
    long long spinc_p = 1, spinc_q = 0;
    auto* spinc = app.add_subcommand("spinc", "enumerate spin-c families");
    spinc->add_option("--base", spinc_base)->required();
    spinc->add_option("--n", spinc_n)->required();
    spinc->add_option("--p", spinc_p);
    spinc->add_option("--q", spinc_q);

    std::uint64_t seed = 1;
    int gn = 1, gm = 0, gp = 0, arcs = 1, loops = 1, bad_arcs = 0;
    std::string eps = "1/1940", eta = "1/20";
    long long sp = 0, sq = 0;

    const auto add_curve_options = [&](CLI::App* sub) {
        sub->add_option("--input", input);
        sub->add_option("--output", output);
        sub->add_option("--seed", seed);
        sub->add_option("--n", gn);
        sub->add_option("--m", gm);
        sub->add_option("--p", gp);
        sub->add_option("--eps", eps);
        sub->add_option("--eta", eta);
        sub->add_option("--arcs", arcs);
        sub->add_option("--loops", loops);
        sub->add_option("--bad-arcs", bad_arcs);
        sub->add_option("--surgery-p", sp);
        sub->add_option("--surgery-q", sq);
    };
    auto* verify = app.add_subcommand("verify-partition",
                                      "check the decomposition and counting identities");
    add_curve_options(verify);
    auto* triangles =
        app.add_subcommand("triangles", "holomorphic-triangle matrices and cancellation");
    add_curve_options(triangles);

    auto* exactness = app.add_subcommand("exactness", "verify the surgery exact triangle");
    exactness->add_option("--input", input)->required();
    exactness->add_option("--output", output);

    auto* render = app.add_subcommand("render", "render a configuration as SVG");
    render->add_option("--input", input)->required();
    render->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dedekind->parsed()) return cmd_dedekind(ded_p, ded_q);
        if (cw->parsed()) return cmd_casson_walker(input, output);
        if (spinc->parsed()) return cmd_spinc(spinc_base, spinc_n, spinc_p, spinc_q);
        if (verify->parsed())
            return cmd_verify_partition(curve_from_cli(input, seed, gn, gm, gp, eps, eta, arcs,
                                                       loops, bad_arcs, sp, sq, false),
                                        output);
        if (triangles->parsed())
            return cmd_triangles(curve_from_cli(input, seed, gn, gm, gp, eps, eta, arcs, loops,
                                                bad_arcs, sp, sq, true),
                                 output);
        if (exactness->parsed()) return cmd_exactness(input, output);
        if (render->parsed()) return cmd_render(input, output);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPreconditionError;
    } catch (const integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitPreconditionError;
    }
    return kExitInputError;
}
