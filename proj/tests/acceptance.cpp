// Acceptance suite: one line per criterion, nonzero exit on any failure.
// --extended additionally runs the S_6 sweeps.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bpd/bpd.hpp"
#include "bpd/degree.hpp"
#include "bpd/moves.hpp"
#include "bpd/poly.hpp"
#include "bpd/support.hpp"
#include "test_util.hpp"

using namespace bpd;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& run) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
         << seconds << "s]";
    if (!detail.empty()) line << "  (" << detail << ")";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

bool oracle_equivalence(int n, double budget_seconds, std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    int count = 0;
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& p) {
        ++count;
        if (!(groth_bpd(p) == groth_oracle(p))) {
            ok = false;
            detail = "grothendieck mismatch at " + to_string(p);
        }
        if (!(schubert_bpd(p) == schubert_oracle(p))) {
            ok = false;
            detail = "schubert mismatch at " + to_string(p);
        }
    });
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > budget_seconds) {
        ok = false;
        detail = "S_" + std::to_string(n) + " exceeded the " + std::to_string(budget_seconds) +
                 "s budget";
    }
    if (ok) detail = std::to_string(count) + " permutations, exact equality";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;

    criterion(1, "oracle equivalence of the pipe dream and divided difference routes "
                 "(S_4 under 5s, S_5 under 10min)",
              [](std::string& detail) {
                  return oracle_equivalence(4, 5.0, detail) &&
                         oracle_equivalence(5, 600.0, detail);
              });

    criterion(2, "Grothendieck degree equals the Rajchgot code sum on S_5",
              [](std::string& detail) {
                  bool ok = true;
                  for_each_permutation(5, [&](const Permutation& p) {
                      if (degree(groth_bpd(p)) != psw_degree(p)) {
                          ok = false;
                          detail = "mismatch at " + to_string(p);
                      }
                  });
                  return ok;
              });

    criterion(3, "vexillary degree formula agreement on S_6 and the 18273564 data",
              [](std::string& detail) {
                  const Permutation p = perm({1, 8, 2, 7, 3, 5, 6, 4});
                  if (length(p) != 12) return false;
                  const FilledShape shape = lambda_filled(p);
                  if (shape.rows != std::vector<int>{6, 4, 1, 1}) {
                      detail = "wrong shape";
                      return false;
                  }
                  const int row_fill[] = {1, 2, 3, 3};
                  for (int r = 1; r <= 4; ++r)
                      for (int c = 1; c <= shape.rows[static_cast<size_t>(r) - 1]; ++c)
                          if (shape.fill.at({r, c}) != row_fill[r - 1]) {
                              detail = "wrong fill";
                              return false;
                          }
                  const int rho_expected[] = {3, 2, 1};
                  for (int k = 1; k <= 3; ++k)
                      if (rho_a(tau(shape, k)) != rho_expected[k - 1]) {
                          detail = "wrong antidiagonal length at k=" + std::to_string(k);
                          return false;
                      }
                  if (psw_degree(p) != 18 || rrw_degree(p) != 18) {
                      detail = "degrees differ from 18";
                      return false;
                  }
                  bool ok = true;
                  int vexillary = 0;
                  for_each_permutation(6, [&](const Permutation& q) {
                      if (!is_vexillary(q)) return;
                      ++vexillary;
                      if (rrw_degree(q) != psw_degree(q)) {
                          ok = false;
                          detail = "mismatch at " + to_string(q);
                      }
                  });
                  if (ok) detail = std::to_string(vexillary) + " vexillary permutations in S_6";
                  return ok;
              });

    criterion(4, "pipe-wise up-elbow bound with equality at maximal degree, vexillary S_5",
              [](std::string& detail) {
                  bool ok = true;
                  for_each_permutation(5, [&](const Permutation& p) {
                      if (!is_vexillary(p) || !ok) return;
                      if (!check_up_elbow_bound(p).passed()) {
                          ok = false;
                          detail = "bound violated at " + to_string(p);
                          return;
                      }
                      const Code r = rajchgot_code(p);
                      const Code c = lehmer_code(p);
                      const Permutation inv = p.inverse();
                      const auto top = max_degree_bpds(p);
                      if (top.empty()) {
                          ok = false;
                          detail = "no maximal-degree pipe dream at " + to_string(p);
                          return;
                      }
                      for (const Bpd& b : top) {
                          const auto ups = up_elbows_per_pipe(b);
                          for (int i = 1; i <= 5; ++i) {
                              const int pos = inv(i);
                              if (ups[static_cast<size_t>(i) - 1] !=
                                  r[static_cast<size_t>(pos) - 1] - c[static_cast<size_t>(pos) - 1]) {
                                  ok = false;
                                  detail = "equality fails at " + to_string(p);
                              }
                          }
                      }
                  });
                  return ok;
              });

    criterion(5, std::string("bump-resolved bound for every permutation in S_5 under 15min") +
                     (extended ? ", and S_6" : ""),
              [extended](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  bool ok = true;
                  long long dreams = 0;
                  const int limit = extended ? 6 : 5;
                  for (int n = 5; n <= limit; ++n)
                      for_each_permutation(n, [&](const Permutation& p) {
                          const CheckReport report = check_up_elbow_bound(p);
                          dreams += report.checked;
                          if (!report.passed()) {
                              ok = false;
                              detail = "violation at " + to_string(p);
                          }
                      });
                  const double seconds = std::chrono::duration<double>(
                                             std::chrono::steady_clock::now() - start)
                                             .count();
                  if (ok && seconds > 900.0) {
                      ok = false;
                      detail = "exceeded the 15 minute budget";
                  }
                  if (ok) detail = std::to_string(dreams) + " pipe dreams checked";
                  return ok;
              });

    criterion(6, "move closure equals the exhaustive tiler on S_4, local moves included",
              [](std::string& detail) {
                  std::map<Permutation, std::set<Bpd>> buckets;
                  for_each_bpd(4, [&](const Bpd& b) { buckets[permutation_of(b)].insert(b); });
                  bool ok = true;
                  for_each_permutation(4, [&](const Permutation& p) {
                      const std::set<Bpd> pipes = enumerate_pipes(p);
                      if (pipes != buckets[p]) {
                          ok = false;
                          detail = "closure mismatch at " + to_string(p);
                      }
                      if (is_vexillary(p) && local_move_closure(Bpd::rothe(p)) != pipes) {
                          ok = false;
                          detail = "local move closure mismatch at " + to_string(p);
                      }
                  });
                  return ok;
              });

    criterion(7, "figure 1 grid: permutation, reducedness and resolved crossings",
              [](std::string& detail) {
                  const Bpd b = Bpd::from_ascii(read_golden("fig1_left.txt"));
                  if (permutation_of(b) != perm({1, 6, 3, 5, 2, 8, 7, 4})) {
                      detail = "wrong permutation";
                      return false;
                  }
                  if (is_reduced(b)) {
                      detail = "grid reported reduced";
                      return false;
                  }
                  if (render_ascii(resolve_to_bumps(b)) != read_golden("fig1_resolved.txt")) {
                      detail = "resolved grid differs";
                      return false;
                  }
                  return true;
              });

    criterion(8, "support suite on S_5 (up-by-one, interval, saturation; down-by-one and "
                 "second-lowest leading for all)",
              [](std::string& detail) {
                  bool ok = true;
                  for_each_permutation(5, [&](const Permutation& p) {
                      if (!ok) return;
                      const bool vex = is_vexillary(p);
                      if (vex && !check_up_by_one(p).passed()) ok = false;
                      if (vex && !check_interval_closure(p).passed()) ok = false;
                      if (vex && !check_divisibility_saturation(p).passed()) ok = false;
                      if (!check_down_by_one(p).passed()) ok = false;
                      if (!check_s_plus_one_leading(p).passed()) ok = false;
                      if (!ok) detail = "violation at " + to_string(p);
                  });
                  return ok;
              });

    criterion(9, "leading terms: formula vs lex-last on vexillary S_5, conjecture scan on S_4",
              [](std::string& detail) {
                  bool ok = true;
                  for_each_permutation(5, [&](const Permutation& p) {
                      if (!is_vexillary(p) || !ok) return;
                      if (!check_leading_terms(p).passed()) {
                          ok = false;
                          detail = "mismatch at " + to_string(p);
                      }
                      if (leading_exponent_formula(p, length(p)) != lehmer_code(p) ||
                          leading_exponent_formula(p, psw_degree(p)) != rajchgot_code(p)) {
                          ok = false;
                          detail = "endpoint mismatch at " + to_string(p);
                      }
                  });
                  for_each_permutation(4, [&](const Permutation& p) {
                      if (!ok) return;
                      if (!check_leading_terms(p).passed()) {
                          ok = false;
                          detail = "conjecture counterexample at " + to_string(p);
                      }
                  });
                  return ok;
              });

    criterion(10, "row-column dichotomy and slide connectivity on vexillary S_5 and 1275463",
               [](std::string& detail) {
                   bool ok = true;
                   for_each_permutation(5, [&](const Permutation& p) {
                       if (!is_vexillary(p) || !ok) return;
                       if (!check_same_row_col(p).passed()) {
                           ok = false;
                           detail = "dichotomy fails at " + to_string(p);
                       }
                       if (!check_top_connectivity(p).passed()) {
                           ok = false;
                           detail = "connectivity fails at " + to_string(p);
                       }
                   });
                   const Permutation example = perm({1, 2, 7, 5, 4, 6, 3});
                   if (ok && !check_same_row_col(example).passed()) {
                       ok = false;
                       detail = "dichotomy fails at 1275463";
                   }
                   if (ok && !check_top_connectivity(example).passed()) {
                       ok = false;
                       detail = "connectivity fails at 1275463";
                   }
                   return ok;
               });

    if (extended) {
        criterion(11, "extended: move closure equals the exhaustive tiler on S_5 and S_6",
                  [](std::string& detail) {
                      bool ok = true;
                      for (int n = 5; n <= 6; ++n) {
                          std::map<Permutation, std::set<Bpd>> buckets;
                          for_each_bpd(n, [&](const Bpd& b) { buckets[permutation_of(b)].insert(b); });
                          for_each_permutation(n, [&](const Permutation& p) {
                              if (enumerate_pipes(p) != buckets[p]) {
                                  ok = false;
                                  detail = "closure mismatch at " + to_string(p);
                              }
                          });
                      }
                      return ok;
                  });
        criterion(12, "extended: oracle equivalence on S_6",
                  [](std::string& detail) { return oracle_equivalence(6, 900.0, detail); });
    }

    if (failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << failures << " acceptance criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
