// Command-line front end: enumeration, verification suites, diagram
// emission, machine-readable reports.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "whitmod/serialize.hpp"
#include "whitmod/verify.hpp"

using namespace whitmod;

namespace {

std::vector<Rational> parse_rationals(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::vector<long> parse_longs(const std::string& csv) {
    std::vector<long> out;
    for (const Rational& q : parse_rationals(csv)) {
        if (!is_integer(q)) throw std::invalid_argument("expected integers: " + csv);
        out.push_back(static_cast<long>(q.get_num().get_si()));
    }
    return out;
}

// gamma flag carries n-1 integers: the U(n-2) part then the U(1) character
SigmaWeight parse_sigma(const std::string& csv, int n) {
    std::vector<long> v = parse_longs(csv);
    if (static_cast<int>(v.size()) != n - 1)
        throw std::invalid_argument("--gamma needs n-1 integers (U(n-2) part, then the U(1) character)");
    SigmaWeight g;
    g.u_part.assign(v.begin(), v.end() - 1);
    g.u1 = v.back();
    return g;
}

Weight sigma_gamma_star(const SigmaWeight& g) {
    std::vector<long> entries(g.u_part.rbegin(), g.u_part.rend());
    for (long& x : entries) x = -x;
    return Weight(entries);
}

GTPattern parse_gt_pattern(const std::string& text) {
    // rows from the top, separated by ';'
    std::vector<std::vector<long>> top_first;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) top_first.push_back(parse_longs(row));
    std::vector<std::vector<long>> rows(top_first.rbegin(), top_first.rend());
    return GTPattern(rows);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Gelfand-Tsetlin and enveloping-algebra calculus for standard Whittaker modules of U(n,1)"};
    app.require_subcommand(1);

    std::string lambda_csv, gamma_csv, weight_csv, pattern_text, gen_text, label_text, ktype_csv;
    std::string format = "json", output;
    int n = 2, rank = 3, order = 12;
    long spread = 4, box_cap = 6;
    bool assert_generic = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|dot|text");
        cmd->add_option("--output", output, "output path (default stdout)");
    };

    CLI::App* gt = app.add_subcommand("gt", "Gelfand-Tsetlin pattern utilities");
    gt->require_subcommand(1);
    CLI::App* gt_enum = gt->add_subcommand("enum", "enumerate patterns of a highest weight");
    gt_enum->add_option("--weight", weight_csv, "weakly decreasing integers")->required();
    add_io(gt_enum);
    CLI::App* gt_act = gt->add_subcommand("act", "act by a gl generator on a pattern");
    gt_act->add_option("--weight", weight_csv)->required();
    gt_act->add_option("--gen", gen_text, "generator indices i,j of E_ij")->required();
    gt_act->add_option("--pattern", pattern_text, "rows from the top, ';'-separated")->required();
    add_io(gt_act);

    CLI::App* spectra = app.add_subcommand("spectra", "K-spectrum box of a module label");
    spectra->add_option("--n", n)->required();
    spectra->add_option("--lambda", lambda_csv, "infinitesimal character entries")->required();
    spectra->add_option("--label", label_text, "module label i,j")->required();
    spectra->add_option("--spread", box_cap, "enumeration cap on lambda_1 - lambda_n");
    add_io(spectra);

    CLI::App* socle = app.add_subcommand("socle", "submodule label determined by sigma");
    socle->add_option("--n", n)->required();
    socle->add_option("--lambda", lambda_csv)->required();
    socle->add_option("--gamma", gamma_csv)->required();
    add_io(socle);

    CLI::App* series = app.add_subcommand("series", "composition series of the standard module");
    series->add_option("--n", n)->required();
    series->add_option("--lambda", lambda_csv)->required();
    series->add_option("--gamma", gamma_csv)->required();
    add_io(series);

    CLI::App* generic = app.add_subcommand("generic", "characteristic exponent parameters, generic character");
    generic->add_option("--n", n)->required();
    generic->add_option("--lambda", lambda_csv)->required();
    generic->add_option("--gamma", gamma_csv)->required();
    generic->add_flag("--assert-generic", assert_generic, "caller asserts every principal series is irreducible");
    add_io(generic);

    CLI::App* frob = app.add_subcommand("frobenius", "indicial roots and truncated series of the central system");
    frob->add_option("--n", n)->required();
    frob->add_option("--lambda", lambda_csv)->required();
    frob->add_option("--gamma", gamma_csv)->required();
    frob->add_option("--ktype", ktype_csv, "U(n) part of the K-type")->required();
    frob->add_option("--order", order, "truncation order (default 12)");
    add_io(frob);

    CLI::App* verify = app.add_subcommand("verify", "run an exact verification suite");
    verify->require_subcommand(1);
    CLI::App* v_shift = verify->add_subcommand("shift-central", "P_k compositions equal the central action");
    v_shift->add_option("--n", n);
    v_shift->add_option("--spread", spread);
    v_shift->add_option("--box", box_cap);
    add_io(v_shift);
    CLI::App* v_quad = verify->add_subcommand("quadratic", "coefficient identity of the central property");
    v_quad->add_option("--n", n);
    v_quad->add_option("--spread", spread);
    v_quad->add_option("--box", box_cap);
    add_io(v_quad);
    CLI::App* v_cap = verify->add_subcommand("capelli", "centrality of the determinant element");
    v_cap->add_option("--rank", rank, "N of gl_N");
    add_io(v_cap);
    CLI::App* v_ext = verify->add_subcommand("exterior", "exterior-calculus identities");
    v_ext->add_option("--rank", rank, "N of gl_N");
    add_io(v_ext);
    CLI::App* v_wh = verify->add_subcommand("whittaker-dim", "dimension partition identity");
    v_wh->add_option("--n", n);
    v_wh->add_option("--spread", spread);
    add_io(v_wh);
    CLI::App* v_iw = verify->add_subcommand("iwasawa", "normal-form round trips and action conventions");
    v_iw->add_option("--n", n);
    add_io(v_iw);

    CLI11_PARSE(app, argc, argv);

    auto report_exit = [&](const std::string& name, const Json& params, const SweepOutcome& oc) {
        Json rep = check_report(name, params, oc.ok(),
                                "cases=" + std::to_string(oc.cases) + " failures=" + std::to_string(oc.failures) +
                                    (oc.degenerate ? " degenerate=" + std::to_string(oc.degenerate) : "") +
                                    (oc.detail.empty() ? "" : " " + oc.detail));
        emit(rep.dump(2), output);
        return oc.ok() ? 0 : 1;
    };

    if (gt_enum->parsed()) {
        Weight w(parse_longs(weight_csv));
        if (format == "text") {
            std::string s;
            for (const auto& q : enumerate_gt(w)) s += q.str() + "\n";
            emit(s, output);
        } else {
            Json out = Json::array();
            for (const auto& q : enumerate_gt(w)) out.push_back(to_json(q));
            emit(out.dump(2), output);
        }
        return 0;
    }
    if (gt_act->parsed()) {
        Weight w(parse_longs(weight_csv));
        std::vector<long> gen = parse_longs(gen_text);
        if (gen.size() != 2) throw std::invalid_argument("--gen needs i,j");
        GTPattern q = parse_gt_pattern(pattern_text);
        if (q.top() != w) throw std::invalid_argument("pattern top row disagrees with --weight");
        GTVector v = act_eij(gen[0], gen[1], GTVector{{q, RadicalSum(1)}});
        Json out = Json::array();
        for (const auto& [p, c] : v) out.push_back(Json{{"pattern", to_json(p)}, {"coeff", to_json(c)}});
        emit(out.dump(2), output);
        return 0;
    }
    if (spectra->parsed()) {
        std::vector<long> lab = parse_longs(label_text);
        if (lab.size() != 2) throw std::invalid_argument("--label needs i,j");
        InfChar L(n, parse_rationals(lambda_csv));
        KTypeBox box = k_spectrum(L, {static_cast<int>(lab[0]), static_cast<int>(lab[1])});
        Json out;
        out["label"] = Json::array({lab[0], lab[1]});
        out["bands"] = Json::array();
        for (int p = 0; p < n; ++p)
            out["bands"].push_back(Json{{"p", p + 1},
                                        {"lo", box.lo_unb[p] ? Json(nullptr) : Json(box.lo[p])},
                                        {"hi", box.hi_unb[p] ? Json(nullptr) : Json(box.hi[p])}});
        out["abs_lambda"] = to_string(box.abs_Lambda);
        out["members"] = Json::array();
        for (const auto& w : box.enumerate(box_cap)) out["members"].push_back(w.entries());
        emit(out.dump(2), output);
        return 0;
    }
    if (socle->parsed()) {
        InfChar L(n, parse_rationals(lambda_csv));
        auto lab = sigma_condition(L, parse_sigma(gamma_csv, n));
        Json out;
        out["socle"] = lab ? Json{{"i", lab->i}, {"j", lab->j}} : Json(nullptr);
        emit(out.dump(2), output);
        return 0;
    }
    if (series->parsed()) {
        InfChar L(n, parse_rationals(lambda_csv));
        CompositionDiagram d = standard_module_diagram(L, parse_sigma(gamma_csv, n));
        emit(format == "dot" ? to_dot(d) : to_json(d).dump(2), output);
        return 0;
    }
    if (generic->parsed()) {
        auto L = parse_rationals(lambda_csv);
        SigmaWeight g = parse_sigma(gamma_csv, n);
        Json out = Json::array();
        for (const auto& e : generic_exponents(L, g, assert_generic)) {
            Json mu = Json::array();
            for (const auto& x : e.param.mu) mu.push_back(to_string(x));
            out.push_back(Json{{"pair", Json::array({e.pair_p, e.pair_q})},
                               {"mu", mu},
                               {"mu_tilde", to_string(e.param.mu_tilde)},
                               {"nu", to_string(e.param.nu)},
                               {"delta_exists", e.delta_exists},
                               {"multiplicity", e.multiplicity}});
        }
        emit(out.dump(2), output);
        return 0;
    }
    if (frob->parsed()) {
        if (n != 2) throw std::invalid_argument("frobenius: only n = 2 is supported");
        auto L = parse_rationals(lambda_csv);
        SigmaWeight g = parse_sigma(gamma_csv, n);
        Weight lam(parse_longs(ktype_csv));
        auto ops = central_system(L, lam.dual(), sigma_gamma_star(g),
                                  {Rational(0), Rational(1), Rational(-1), Rational(2)});
        Json out;
        out["exponents"] = Json::array();
        for (const auto& [s, seed] : indicial_roots(ops))
            out["exponents"].push_back(Json{{"exponent", to_string(s)}, {"seed", seed}});
        out["solutions"] = Json::array();
        for (const auto& sol : frobenius(ops, order)) {
            out["solutions"].push_back(Json{{"exponent", to_string(sol.exponent)},
                                            {"seed", sol.seed},
                                            {"order", sol.order},
                                            {"resonant", sol.resonant},
                                            {"log_obstructed", sol.log_obstructed},
                                            {"residual_zero", frobenius_residual_ok(ops, sol)}});
        }
        emit(out.dump(2), output);
        return 0;
    }
    if (v_shift->parsed())
        return report_exit("shift-central", Json{{"n", n}, {"spread", spread}, {"box", box_cap}},
                           verify_shift_central_sweep(n, spread, box_cap));
    if (v_quad->parsed())
        return report_exit("quadratic", Json{{"n", n}, {"spread", spread}, {"box", box_cap}},
                           verify_quadratic_sweep(n, spread, box_cap));
    if (v_cap->parsed()) return report_exit("capelli", Json{{"rank", rank}}, verify_capelli(rank));
    if (v_ext->parsed()) return report_exit("exterior", Json{{"rank", rank}}, verify_exterior(rank));
    if (v_wh->parsed())
        return report_exit("whittaker-dim", Json{{"n", n}, {"spread", spread}}, verify_whittaker_sweep(n, spread));
    if (v_iw->parsed()) return report_exit("iwasawa", Json{{"n", n}}, verify_iwasawa(n));
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
