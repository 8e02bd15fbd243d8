// Acceptance suite: every exact identity the library is contracted to
// reproduce, one pass/fail line per criterion.  Exit code is the number of
// failed criteria.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "whitmod/serialize.hpp"
#include "whitmod/verify.hpp"

using namespace whitmod;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(int idx, const std::string& name, bool ok, const std::string& detail, double seconds) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name << " (" << detail << ", " << seconds
       << "s)";
    std::cout << ss.str() << "\n";
    if (!ok) ++g_failures;
}

template <class F>
void criterion(int idx, const std::string& name, F&& body) {
    auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    line(idx, name, ok, detail, secs);
}

std::string slurp(const std::string& name) {
    std::ifstream f(std::string(WHITMOD_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string stats(const SweepOutcome& oc) {
    std::string s = "cases=" + std::to_string(oc.cases) + " failures=" + std::to_string(oc.failures);
    if (oc.degenerate) s += " degenerate=" + std::to_string(oc.degenerate);
    return s;
}

}  // namespace

int main() {
    criterion(1, "Capelli centrality, symbolic u, gl_2 and gl_3", [](std::string& detail) {
        auto start = Clock::now();
        SweepOutcome a = verify_capelli(2), b = verify_capelli(3);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        detail = stats(a) + " / " + stats(b);
        return a.ok() && b.ok() && secs < 10.0;
    });

    criterion(2, "infinitesimal character of C_{n+1}(u), 20 sampled characters", [](std::string& detail) {
        long cases = 0, failures = 0;
        auto run = [&](int n, const std::vector<std::vector<Rational>>& samples) {
            SweepOutcome oc = verify_inf_char(n, samples);
            cases += oc.cases;
            failures += oc.failures;
        };
        auto half = [](int n, std::vector<long> ks) {
            std::vector<Rational> out;
            for (long k : ks) out.push_back(frac(n, 2) + k);
            return out;
        };
        run(1, {half(1, {1, 0}), half(1, {2, 0}), half(1, {3, 1}), half(1, {2, -1}), half(1, {5, 2}),
                half(1, {0, -3}), half(1, {4, 0})});
        run(2, {half(2, {2, 1, 0}), half(2, {3, 1, 0}), half(2, {4, 2, 1}), half(2, {2, 0, -1}),
                half(2, {5, 3, 0}), half(2, {1, 0, -2}), half(2, {6, 4, 2})});
        run(3, {half(3, {3, 2, 1, 0}), half(3, {4, 2, 1, 0}), half(3, {5, 3, 2, 1}), half(3, {3, 1, 0, -1}),
                half(3, {4, 3, 2, 0}), half(3, {2, 1, 0, -2})});
        detail = "cases=" + std::to_string(cases) + " failures=" + std::to_string(failures);
        return cases == 20 && failures == 0;
    });

    criterion(3, "exterior determinant identity and expansions, gl_2 and gl_3", [](std::string& detail) {
        auto start = Clock::now();
        SweepOutcome a = verify_exterior(2), b = verify_exterior(3);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        detail = stats(a) + " / " + stats(b);
        return a.ok() && b.ok() && secs < 60.0;
    });

    criterion(4, "shift-central identity over the full sweep, n = 2 and 3", [](std::string& detail) {
        SweepOutcome a = verify_shift_central_sweep(2, 4, 6);
        SweepOutcome b = verify_shift_central_sweep(3, 4, 6);
        detail = stats(a) + " / " + stats(b);
        return a.ok() && b.ok();
    });

    criterion(5, "quadratic coefficient identity over the same sweep", [](std::string& detail) {
        SweepOutcome a = verify_quadratic_sweep(2, 4, 6);
        SweepOutcome b = verify_quadratic_sweep(3, 4, 6);
        detail = stats(a) + " / " + stats(b);
        return a.ok() && b.ok();
    });

    criterion(6, "first-principles derivation equals the closed central action", [](std::string& detail) {
        // 15 required cases at n = 2 (both derivation models) plus n = 3
        SweepOutcome oc = verify_derive_matches_closed();
        detail = stats(oc);
        return oc.ok() && oc.cases == 19;
    });

    criterion(7, "Whittaker dimension partition, n = 3 and 4, spread <= 5", [](std::string& detail) {
        SweepOutcome a = verify_whittaker_sweep(3, 5);
        SweepOutcome b = verify_whittaker_sweep(4, 5);
        detail = stats(a) + " / " + stats(b);
        return a.ok() && b.ok();
    });

    criterion(8, "composition diagrams match the golden files; blocks and boxes are disjoint",
              [](std::string& detail) {
                  InfChar l2(2, {Rational(2), Rational(1), Rational(0)});
                  InfChar l3(3, {Rational(5, 2), Rational(3, 2), Rational(1, 2), Rational(-1, 2)});
                  InfChar l4(4, {Rational(4), Rational(3), Rational(2), Rational(1), Rational(0)});
                  long golden_fail = 0;
                  auto match = [&](const CompositionDiagram& d, const std::string& file) {
                      if (to_dot(d) != slurp(file)) ++golden_fail;
                  };
                  CompositionDiagram s2 = standard_module_diagram(l2, SigmaWeight{{}, 3});
                  CompositionDiagram s4 = standard_module_diagram(l4, sigma_block(l4, 1, 2).front());
                  match(s2, "standard_n2.dot");
                  match(standard_module_diagram(l3, SigmaWeight{{1}, 3}), "standard_n3_edge.dot");
                  match(standard_module_diagram(l3, SigmaWeight{{2}, 2}), "standard_n3_corner.dot");
                  match(s4, "standard_n4_interior.dot");
                  match(ps_composition_series(2, 0, 1), "ps_n2_01.dot");
                  match(ps_composition_series(2, 0, 2), "ps_n2_02.dot");
                  match(ps_composition_series(2, 1, 1), "ps_n2_11.dot");
                  match(ps_composition_series(3, 1, 1), "ps_n3_11.dot");
                  match(ps_composition_series(4, 1, 2), "ps_n4_12.dot");
                  bool shapes = s4.nodes.size() == 9 && s4.arrows.size() == 12 && s2.nodes.size() == 6;
                  SweepOutcome d2 = verify_disjointness(2, 4, 5);
                  SweepOutcome d3 = verify_disjointness(3, 4, 5);
                  SweepOutcome d4 = verify_disjointness(4, 4, 5);
                  detail = "golden_failures=" + std::to_string(golden_fail) + " disjointness: " + stats(d2) + " / " +
                           stats(d3) + " / " + stats(d4);
                  return golden_fail == 0 && shapes && d2.ok() && d3.ok() && d4.ok();
              });

    criterion(9, "Frobenius exponents match the parameter enumeration, residuals to order 12",
              [](std::string& detail) {
                  long failures = 0, cases = 0;
                  for (const auto& [Lambda, lam] :
                       std::vector<std::pair<std::vector<Rational>, Weight>>{
                           {{Rational(1, 3), Rational(0), Rational(-1, 3)}, Weight({1, -1})},
                           {{Rational(2, 5), Rational(0), Rational(-2, 5)}, Weight({1, -1})},
                           {{Rational(1, 3), Rational(0), Rational(-1, 3)}, Weight({2, -2})}}) {
                      Rational absL = 0;
                      for (const Rational& x : Lambda) absL += x;
                      long u1 = static_cast<long>(absL.get_num().get_si());
                      SweepOutcome oc = verify_frobenius_generic(Lambda, lam, SigmaWeight{{}, u1}, 12);
                      cases += oc.cases;
                      failures += oc.failures;
                  }
                  detail = "cases=" + std::to_string(cases) + " failures=" + std::to_string(failures);
                  return failures == 0 && cases > 0;
              });

    criterion(10, "mutation sanity: every perturbed coefficient is detected", [](std::string& detail) {
        SweepOutcome oc = verify_mutation_sanity();
        detail = stats(oc);
        return oc.ok();
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria failed\n");
    return g_failures;
}
