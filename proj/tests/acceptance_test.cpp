// Acceptance suite: every release criterion as one exact check with its time
// budget, one verdict line each.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "eisen/cfunction.hpp"
#include "eisen/characters.hpp"
#include "eisen/cli.hpp"
#include "eisen/exchange.hpp"
#include "eisen/orbit.hpp"
#include "eisen/theorems.hpp"
#include "eisen/verify.hpp"

using namespace eisen;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    bool in_budget = elapsed <= budget_seconds;
    if (!in_budget && detail.empty())
        detail = "exceeded " + std::to_string(budget_seconds) + "s";
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::ostringstream line;
    line << "[" << (number < 10 ? " " : "") << number << "] "
         << (pass ? "PASS" : "FAIL") << "  " << label << "  (" << elapsed << "s)";
    if (!pass && !detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
}

} // namespace

int main() {
    criterion(1, "pole-list closure with descent gates, m <= 10, n <= 3", 1.0,
              [](std::string& detail) {
                  for (int n = 1; n <= 3; ++n)
                      for (int m1 = 1; m1 <= 9; ++m1)
                          for (int m2 = 1; m1 + m2 <= 10; ++m2) {
                              PoleList list = pole_list({n, m1, m2});
                              if (!list.gates_ok || !list.matches_closed_form) {
                                  detail = "failed at n=" + std::to_string(n) + " (m1,m2)=(" +
                                           std::to_string(m1) + "," + std::to_string(m2) + ")";
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(2, "rightmost pole certified at m/4, m <= 10", 5.0, [](std::string& detail) {
        for (int m1 = 1; m1 <= 9; ++m1)
            for (int m2 = 1; m1 + m2 <= 10; ++m2) {
                auto scan = rightmost_pole_scan(m1, m2);
                if (!scan.pass()) {
                    detail = "(m1,m2)=(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
                    return false;
                }
            }
        return true;
    });

    criterion(3, "inversion-set product equals the closed form on every cell, m <= 8", 5.0,
              [](std::string& detail) {
                  int cells = 0;
                  for (int m1 = 1; m1 < 8; ++m1)
                      for (int m2 = 1; m1 + m2 <= 8; ++m2)
                          for (const Cell& c : enumerate_cells(m1, m2)) {
                              ++cells;
                              if (gk_ratio(c, m1, m2) != closed_form_c(c, m1, m2)) {
                                  detail = "(m1,m2)=(" + std::to_string(m1) + "," +
                                           std::to_string(m2) + ") cell " + to_string(c);
                                  return false;
                              }
                          }
                  if (cells < 200) {
                      detail = "sweep unexpectedly small";
                      return false;
                  }
                  return true;
              });

    criterion(4, "base cell: L(2s)/L(2s+1), simple pole at 1/2, none at 3/4", 1.0,
              [](std::string& detail) {
                  Cell swap{2, Composition({0, 1}), Composition({1, 0})};
                  RatioProduct prod = gk_ratio(swap, 1, 1);
                  RatioProduct expect;
                  expect.numerators.push_back({rat(0), rat(2)});
                  expect.denominators.push_back({rat(1), rat(2)});
                  if (prod != expect.simplified()) {
                      detail = "ratio is " + to_string(prod);
                      return false;
                  }
                  auto at_half = pole_certificate(prod, rat(1, 2));
                  auto at_34 = pole_certificate(prod, rat(3, 4));
                  if (at_half.order != 1 || !at_half.exact) {
                      detail = "certificate at 1/2";
                      return false;
                  }
                  if (at_34.order != 0 || !at_34.exact) {
                      detail = "certificate at 3/4";
                      return false;
                  }
                  return true;
              });

    criterion(5, "worked example: partition (4,2,1) orbit data", 1.0,
              [](std::string& detail) {
                  Partition p({4, 2, 1});
                  auto d = parse_orbit_data(p);
                  if (d.k != 2 || d.m != std::vector<int>{2, 1} ||
                      d.n != std::vector<int>{1, 0}) {
                      detail = "decomposition";
                      return false;
                  }
                  IntMatrix expected(7, 7);
                  expected.at(1, 0) = 1;
                  expected.at(4, 1) = 1;
                  expected.at(5, 2) = 1;
                  expected.at(6, 4) = 1;
                  if (support_matrix(p) != expected) {
                      detail = "support matrix";
                      return false;
                  }
                  if (jordan_partition(support_matrix(p)) != p) {
                      detail = "jordan type";
                      return false;
                  }
                  if (stabilizer_shape(p) != std::vector<int>{1, 1, 1}) {
                      detail = "stabilizer shape";
                      return false;
                  }
                  if (heisenberg_dim(p) != 2) {
                      detail = "heisenberg dimension";
                      return false;
                  }
                  auto roots = root_sets(p);
                  if (roots.n_full.size() - roots.n_square.size() != 4) {
                      detail = "root count difference";
                      return false;
                  }
                  return true;
              });

    criterion(6, "orbit sweep: jordan, weight gap, polarization for all l <= 12", 10.0,
              [](std::string& detail) {
                  for (int ell = 1; ell <= 12; ++ell)
                      for (const Partition& p : partitions_of(ell)) {
                          IntMatrix alpha = support_matrix(p);
                          if (jordan_partition(alpha) != p) {
                              detail = "jordan at (" + to_string(p) + ")";
                              return false;
                          }
                          if (!is_whittaker_pair({torus_weights(p), alpha})) {
                              detail = "weight gap at (" + to_string(p) + ")";
                              return false;
                          }
                          auto pol = polarization(p);
                          int np = heisenberg_dim(p);
                          if (static_cast<int>(pol.x.size()) != np ||
                              static_cast<int>(pol.y.size()) != np) {
                              detail = "polarization size at (" + to_string(p) + ")";
                              return false;
                          }
                          if (!is_abelian(pol.x) || !is_abelian(pol.y)) {
                              detail = "polarization not abelian at (" + to_string(p) + ")";
                              return false;
                          }
                          IntMatrix gram(np, np);
                          int i = 0;
                          for (auto u : pol.x) {
                              int j = 0;
                              for (auto v : pol.y) {
                                  IntMatrix x = IntMatrix::identity(ell);
                                  IntMatrix y = IntMatrix::identity(ell);
                                  x.at(u.first, u.second) = 1;
                                  y.at(v.first, v.second) = 1;
                                  gram.at(i, j++) = symplectic_pair(p, x, y).numerator();
                              }
                              ++i;
                          }
                          if (rank(gram) != np) {
                              detail = "pairing rank at (" + to_string(p) + ")";
                              return false;
                          }
                      }
                  return true;
              });

    criterion(7, "exchange plans: hooks l <= 8, rectangles kr <= 12 with obstructions",
              30.0, [](std::string& detail) {
                  auto digest = [&detail](const PlanReport& rep) {
                      if (rep.all_pass) return true;
                      for (const auto& step : rep.steps)
                          if (!step.pass) {
                              detail = rep.plan + ": " + step.name;
                              return false;
                          }
                      detail = rep.plan;
                      return false;
                  };
                  for (int ell = 1; ell <= 8; ++ell)
                      for (int k = 1; k <= ell; ++k) {
                          if (!digest(verify_hook_descent_plan(ell, k))) return false;
                          if (!digest(verify_hook_mirror_plan(ell, k))) return false;
                      }
                  for (int k = 1; k <= 12; ++k)
                      for (int r = 1; k * r <= 12; ++r) {
                          if (!digest(verify_rectangle_whittaker_plan(k, r))) return false;
                          if (r >= 2 && !digest(verify_rectangle_diagonal_invariance(k, r, 20, 1)))
                              return false;
                      }
                  return true;
              });

    criterion(8, "character scans: strip empty, center clean, case formulas", 10.0,
              [](std::string& detail) {
                  for (int m1 = 1; m1 < 8; ++m1)
                      for (int m2 = 1; m1 + m2 <= 8; ++m2)
                          for (int n = 1; n <= 3; ++n)
                              for (const auto& sol :
                                   trivial_character_solutions(m1, m2, n)) {
                                  if (sol.s0 && *sol.s0 >= rat(0) &&
                                      *sol.s0 < rat(m1 + m2, 4)) {
                                      detail = "trivial in the strip at (m1,m2,n)=(" +
                                               std::to_string(m1) + "," +
                                               std::to_string(m2) + "," + std::to_string(n) +
                                               ")";
                                      return false;
                                  }
                                  bool ends = sol.cell.a[0] >= 1 &&
                                              sol.cell.b[sol.cell.r - 1] >= 1;
                                  if (ends &&
                                      !compare_first_exponent(sol.cell, m1, m2, n).match) {
                                      detail = "case formula at cell " +
                                               to_string(sol.cell);
                                      return false;
                                  }
                              }
                  for (int k = 1; k <= 4; ++k)
                      for (int n = 1; n <= 3; ++n)
                          if (!vanishing_at_zero_report(k, n).consistent_vanishing) {
                              detail = "trivial character at 0 for k=" + std::to_string(k);
                              return false;
                          }
                  return true;
              });

    criterion(9, "residual orbits with bound and recursion, m <= 10, n <= 3", 1.0,
              [](std::string& detail) {
                  for (int n = 1; n <= 3; ++n)
                      for (int m1 = 1; m1 <= 9; ++m1)
                          for (int m2 = 1; m1 + m2 <= 10; ++m2) {
                              SpehSpec spec{n, m1, m2};
                              for (int i = 0; i <= spec.min_len() - 1; ++i) {
                                  std::vector<int> expect(i, 2 * n);
                                  expect.insert(expect.end(), spec.m() - 2 * i, n);
                                  if (residual_orbit(spec, i) != Partition(expect)) {
                                      detail = "orbit at i=" + std::to_string(i);
                                      return false;
                                  }
                              }
                          }
                  return true;
              });

    criterion(10, "unramified coincidence m <= 8 and linkage agreement m <= 10", 5.0,
              [](std::string& detail) {
                  for (int n = 1; n <= 3; ++n)
                      for (int m1 = 1; m1 < 8; ++m1)
                          for (int m2 = 1; m1 + m2 <= 8; ++m2) {
                              SpehSpec spec{n, m1, m2};
                              for (int i = 0; i <= spec.min_len() - 1; ++i)
                                  if (!coincidence_check(spec, i)) {
                                      detail = "coincidence at (n,m1,m2,i)=(" +
                                               std::to_string(n) + "," + std::to_string(m1) +
                                               "," + std::to_string(m2) + "," +
                                               std::to_string(i) + ")";
                                      return false;
                                  }
                          }
                  for (int m1 = 1; m1 <= 9; ++m1)
                      for (int m2 = 1; m1 + m2 <= 10; ++m2) {
                          auto list = pole_list({1, m1, m2});
                          std::vector<Rat> points;
                          for (auto it = list.poles.rbegin(); it != list.poles.rend(); ++it)
                              points.push_back(it->first);
                          if (linked_points(m1, m2, rat(m1 + m2)) != points) {
                              detail = "linkage at (m1,m2)=(" + std::to_string(m1) + "," +
                                       std::to_string(m2) + ")";
                              return false;
                          }
                      }
                  return true;
              });

    criterion(11, "full verification command exits clean in budget", 60.0,
              [](std::string& detail) {
                  std::ostringstream out, err;
                  int code = run_cli({"verify", "--suite", "all", "--max-size", "8"}, out, err);
                  if (code != 0) {
                      detail = "exit code " + std::to_string(code);
                      std::istringstream lines(out.str());
                      std::string line;
                      while (std::getline(lines, line))
                          if (line.find("failure") != std::string::npos) detail += "; " + line;
                      return false;
                  }
                  return true;
              });

    std::cout << (failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
