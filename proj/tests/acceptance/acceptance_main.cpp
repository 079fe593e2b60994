// End-to-end acceptance gate: one line per criterion, nonzero exit when any
// fails or overruns its time budget.  Usage:
//   puv_acceptance --cli <path-to-puv-binary> --golden <path-to-golden-dir>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "puv/kernels.hpp"
#include "puv/partition.hpp"
#include "puv/probability.hpp"
#include "puv/qseries.hpp"
#include "puv/rsk.hpp"
#include "puv/schur.hpp"
#include "puv/tableau.hpp"

using namespace puv;

namespace {

std::string g_cli, g_golden;

struct Check {
  int id;
  std::string label;
  double limit_seconds;  // 0 = untimed
  std::function<bool(std::string&)> run;
};

// ---- shared helpers -------------------------------------------------------

VarianceProfile<Rational> random_profile(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 9);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  std::vector<Rational> chi(static_cast<std::size_t>(n)), delta;
  for (auto& v : chi) v = draw();
  while (static_cast<int>(delta.size()) < n) {
    Rational d = draw();
    bool dup = false;
    for (const Rational& seen : delta) dup = dup || seen == d;
    if (!dup) delta.push_back(d);
  }
  return {std::move(chi), std::move(delta)};
}

std::vector<Column> all_columns(int n) {
  std::vector<Column> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> e;
    for (int v = 1; v <= n; ++v)
      if (mask & (1 << (v - 1))) e.push_back(v);
    out.push_back(Column(n, std::move(e)));
  }
  return out;
}

// ---- criteria -------------------------------------------------------------

bool cross_method_agreement(std::string& detail) {
  VarianceProfile<Rational> anchor({Rational(1), Rational(1)}, {Rational(2), Rational(3)});
  if (barett_direct(anchor) != Rational(115, 144) ||
      prob_stable(anchor) != Rational(115, 144)) {
    detail = "anchor profile does not give 115/144";
    return false;
  }
  std::mt19937 rng(8101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    VarianceProfile<Rational> p = random_profile(rng, n);
    Rational direct = barett_direct(p);
    Rational stable = prob_stable(p);
    Rational cleared = f_from_barett(p.chi, p.delta);
    for (const Rational& ci : p.chi)
      for (const Rational& dj : p.delta) cleared /= ci + dj;
    if (direct != stable || direct != cleared) {
      detail = "method mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool schur_expansion_equivalence(std::string& detail) {
  std::mt19937 rng(8202);
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 7);
  for (int n = 1; n <= 3; ++n) {
    MultiPoly f = f_schur(n);
    for (int point = 0; point < 5; ++point) {
      std::vector<Rational> chi, delta;
      for (int i = 0; i < n; ++i) chi.emplace_back(num(rng), den(rng));
      while (static_cast<int>(delta.size()) < n) {
        Rational d(num(rng), den(rng));
        bool dup = false;
        for (const Rational& seen : delta) dup = dup || seen == d;
        if (!dup) delta.push_back(d);
      }
      if (eval_multipoly<Rational>(f, delta, chi) != f_from_barett(chi, delta)) {
        detail = "expansion disagrees at n=" + std::to_string(n) + " point " +
                 std::to_string(point);
        return false;
      }
    }
  }
  return true;
}

bool filling_counts(std::string& detail) {
  const long long want[] = {1, 8, 256};
  for (int n = 1; n <= 3; ++n) {
    BigInt got = count_square_fillings(n);
    BigInt through_map = count_s1_fillings_reference(n);
    if (got != want[n - 1] || got != alpha(n) || through_map != got) {
      detail = "count at n=" + std::to_string(n) + " is " + got.str() +
               " (image enumeration gives " + through_map.str() + ")";
      return false;
    }
  }
  return true;
}

bool partial_fraction_half(std::string& detail) {
  const Rational ts[] = {Rational(2), Rational(3), Rational(1, 2), Rational(3, 2),
                         Rational(7, 5)};
  for (int n = 1; n <= 8; ++n)
    for (const Rational& t : ts)
      if (partial_fraction_sum(n, t) != Rational(1, 2)) {
        detail = "sum is not 1/2 at n=" + std::to_string(n) + ", t=" + format_rational(t);
        return false;
      }
  return true;
}

bool q_newton_coefficients(std::string& detail) {
  for (int n = 1; n <= 10; ++n) {
    auto [lhs, rhs] = q_newton_check(n);
    if (!(lhs == rhs)) {
      detail = "sides differ at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool bijection_round_trips(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    const unsigned total = 1u << (n * n);
    for (unsigned mask = 0; mask < total; ++mask) {
      ZeroOneMatrix m(n);
      for (std::size_t k = 0; k < m.bits.size(); ++k)
        m.bits[k] = static_cast<std::uint8_t>((mask >> k) & 1u);
      if (!(phi_inverse(phi(m)) == m)) {
        detail = "round trip failed at n=" + std::to_string(n) + " mask " +
                 std::to_string(mask);
        return false;
      }
    }
  }
  std::uint64_t bad = count_roundtrip_failures(6, 10000, 424242, ExecMode::Parallel);
  if (bad != 0) {
    detail = std::to_string(bad) + " random n=6 failures";
    return false;
  }
  return true;
}

bool construction_symmetry(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    const unsigned total = 1u << (n * n);
    for (unsigned mask = 0; mask < total; ++mask) {
      ZeroOneMatrix m(n);
      for (std::size_t k = 0; k < m.bits.size(); ++k)
        m.bits[k] = static_cast<std::uint8_t>((mask >> k) & 1u);
      SquareFilling s = phi(m);
      TableauPair alt = alternate_phi(m);
      if (!(alt.first == s.delta_tab && alt.second == s.chi_tab)) {
        detail = "constructions differ at n=" + std::to_string(n) + " mask " +
                 std::to_string(mask);
        return false;
      }
    }
  }
  for (int n = 4; n <= 6; ++n) {
    std::uint64_t bad = count_symmetry_mismatches(n, 10000, 515151, ExecMode::Parallel);
    if (bad != 0) {
      detail = std::to_string(bad) + " mismatches at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool complement_order_properties(std::string& detail) {
  // Splitting a column c(S) at any height gives c(S) <= prefix, and the
  // complements compare the other way round.
  for (int n = 1; n <= 8; ++n) {
    for (const Column& s : all_columns(n)) {
      for (int cut = 0; cut <= s.height(); ++cut) {
        Column i(n, std::vector<int>(s.entries.begin(), s.entries.begin() + cut));
        if (!column_leq(s, i) ||
            !column_leq(column_complement(i), column_complement(s))) {
          detail = "prefix split property failed at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  // Equal length: complement reverses the order.
  for (int n = 1; n <= 6; ++n) {
    for (const Column& a : all_columns(n)) {
      for (const Column& b : all_columns(n)) {
        if (a.height() != b.height() || !column_leq(a, b)) continue;
        if (!column_leq(column_complement(b), column_complement(a))) {
          detail = "equal-length reversal failed at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  // Across a length gap: c(S) <= c(K) with |K| = bottom part of S.
  for (int n = 1; n <= 6; ++n) {
    for (const Column& s : all_columns(n)) {
      for (int cut = 0; cut <= s.height(); ++cut) {
        for (const Column& k : all_columns(n)) {
          if (k.height() != cut || !column_leq(s, k)) continue;
          if (!column_leq(column_complement(k), column_complement(s))) {
            detail = "length-gap reversal failed at n=" + std::to_string(n);
            return false;
          }
        }
      }
    }
  }
  // Column-by-column complementation sends tableaux to tableaux.
  for (const Partition& shape : partitions_in_rectangle(4, 4)) {
    for (const Tableau& t : list_tableaux(shape, 4)) {
      Tableau bar = complement_tableau(t, 4);
      if (!bar.rows.empty() && !is_young_tableau(Tabloid(bar.rows))) {
        detail = "complement of a tableau is not a tableau";
        return false;
      }
      if (!(bar.shape() == complement(conjugate(t.shape()), 4)) ||
          !(complement_tableau(bar, 4) == t)) {
        detail = "complement shape or involution failed";
        return false;
      }
    }
  }
  return true;
}

bool monte_carlo_consistency(std::string& detail) {
  const std::vector<VarianceProfile<double>> profiles = {
      {{1.0, 1.0}, {2.0, 3.0}},
      {{1.0, 1.0}, {2.0, 2.0}},
      {{1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}},
      {{1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 1.0, 1.0}},
      {{0.5, 5.0, 1.0, 1.0}, {2.0, 2.0, 3.0, 3.0}},
  };
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    double reference = prob_stable(p);
    MonteCarloResult r = monte_carlo(p, 1000000, 20240915, ExecMode::Parallel);
    if (std::abs(r.estimate - reference) > 3.0 * r.std_error) {
      std::ostringstream os;
      os << "profile " << i << ": estimate " << r.estimate << " vs " << reference
         << " (3se = " << 3.0 * r.std_error << ")";
      detail = os.str();
      return false;
    }
  }
  return true;
}

bool stability_demonstration(std::string& detail) {
  const std::vector<double> chi{40.0, 40.0};

  // The stable method stays finite and settles as the two delta values merge.
  const double eps_ladder[] = {1e-3, 1e-6, 1e-9};
  std::vector<double> ladder;
  for (double eps : eps_ladder) {
    VarianceProfile<double> p(chi, {2.0, 2.0 + eps});
    double v = prob_stable(p);
    if (!std::isfinite(v) || v <= 0 || v >= 1) {
      detail = "stable value not finite in (0,1) at eps=" + std::to_string(eps);
      return false;
    }
    ladder.push_back(v);
  }
  double merged = prob_stable(VarianceProfile<double>(chi, {2.0, 2.0}));
  double exact_merged =
      static_cast<double>(prob_stable(VarianceProfile<Rational>(
          {Rational(40), Rational(40)}, {Rational(2), Rational(2)})));
  if (!(ladder[0] > ladder[1] && ladder[1] > ladder[2])) {
    detail = "stable values are not monotone along the eps ladder";
    return false;
  }
  if (std::abs(ladder[0] - ladder[1]) > 1e-5 || std::abs(ladder[1] - ladder[2]) > 1e-5) {
    detail = "successive stable values differ by more than 1e-5";
    return false;
  }
  if (std::abs(ladder[2] - merged) > 1e-6 || std::abs(merged - exact_merged) > 1e-9) {
    detail = "stable values do not converge to the exact merged-delta value";
    return false;
  }

  // The direct formula loses at least six digits where it still answers: at
  // eps = 1e-8, just above its duplicate-delta refusal threshold.
  const double eps = 1e-8;
  VarianceProfile<double> close(chi, {2.0, 2.0 + eps});
  VarianceProfile<Rational> close_exact(
      {Rational(40), Rational(40)},
      {Rational(2), Rational(2) + Rational(1, 100000000)});
  double direct = barett_direct(close);
  double exact = static_cast<double>(barett_direct(close_exact));
  double direct_rel = std::abs(direct - exact) / std::abs(exact);
  double stable_rel = std::abs(prob_stable(close) - exact) / std::abs(exact);
  if (direct_rel < 1e6 * DBL_EPSILON) {
    std::ostringstream os;
    os << "direct-formula relative error " << direct_rel << " is below 1e6*eps";
    detail = os.str();
    return false;
  }
  if (stable_rel > 1e-9) {
    std::ostringstream os;
    os << "stable relative error " << stable_rel << " exceeds 1e-9";
    detail = os.str();
    return false;
  }

  // And it refuses outright once the gap drops under the collision threshold.
  try {
    barett_direct(VarianceProfile<double>(chi, {2.0, 2.0 + 1e-9}));
    detail = "direct formula accepted a sub-threshold delta gap";
    return false;
  } catch (const DuplicateDeltaError&) {
  }
  return true;
}

bool two_value_specialization(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<BigInt> coeffs = specialize_two_values(n);
    const int nn = n * n;
    for (int k = 0; k <= nn; ++k) {
      if (coeffs[static_cast<std::size_t>(k)] +
              coeffs[static_cast<std::size_t>(nn - k)] !=
          binomial(nn, k)) {
        detail = "binomial identity failed at n=" + std::to_string(n) +
                 ", k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

// ---- golden files ---------------------------------------------------------

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool run_cli(const std::string& args, std::string& out, int& exit_code) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  out.clear();
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return true;
}

bool golden_reproduction(std::string& detail) {
  std::ifstream manifest(g_golden + "/manifest.tsv");
  if (!manifest) {
    detail = "cannot open " + g_golden + "/manifest.tsv";
    return false;
  }
  std::string line;
  int cases = 0;
  std::string first_args;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string name, sub, flags;
    std::getline(ss, name, '\t');
    std::getline(ss, sub, '\t');
    std::getline(ss, flags, '\t');
    std::string args = sub + (flags.empty() ? "" : " " + flags) + " --input " +
                       g_golden + "/inputs/" + name + ".json";
    if (first_args.empty()) first_args = args;

    std::string out, want;
    int code = -1;
    if (!run_cli(args, out, code) || code != 0) {
      detail = name + ": CLI exited with " + std::to_string(code);
      return false;
    }
    if (!read_file(g_golden + "/expected/" + name + ".json", want)) {
      detail = name + ": missing expected file";
      return false;
    }
    if (out != want) {
      detail = name + ": output differs from the golden file";
      return false;
    }
    ++cases;
  }
  if (cases == 0) {
    detail = "manifest lists no cases";
    return false;
  }
  std::string once, twice;
  int code = -1;
  if (!run_cli(first_args, once, code) || !run_cli(first_args, twice, code) ||
      once != twice) {
    detail = "repeated run is not byte-identical";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli")
      g_cli = argv[i + 1];
    else if (flag == "--golden")
      g_golden = argv[i + 1];
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  if (g_cli.empty() || g_golden.empty()) {
    std::cerr << "usage: puv_acceptance --cli <binary> --golden <dir>\n";
    return 2;
  }

  const std::vector<Check> checks = {
      {1, "cross-method probability agreement, 200 random profiles", 10, cross_method_agreement},
      {2, "Schur expansion equals the cleared direct formula", 30, schur_expansion_equivalence},
      {3, "square filling counts 1, 8, 256", 5, filling_counts},
      {4, "partial fraction sum is 1/2 up to n=8", 5, partial_fraction_half},
      {5, "alternating q-binomial sum up to n=10", 1, q_newton_coefficients},
      {6, "bijection round trips, exhaustive and random", 30, bijection_round_trips},
      {7, "two-word construction matches the bijection", 60, construction_symmetry},
      {8, "column complement order laws and tableau complement", 30, complement_order_properties},
      {9, "Monte Carlo within 3 standard errors on 5 profiles", 10, monte_carlo_consistency},
      {10, "stable method converges where the direct formula cancels", 0, stability_demonstration},
      {11, "two-value specialization binomial identity", 10, two_value_specialization},
      {12, "golden files reproduce byte-exactly", 0, golden_reproduction},
  };

  int failures = 0;
  for (const Check& c : checks) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds <= 0 || seconds <= c.limit_seconds;
    bool pass = ok && in_time;

    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", seconds, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.label << " ("
              << timing << ")";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    if (ok && !in_time) std::cout << " -- exceeded the time budget";
    std::cout << "\n";
    if (!pass) ++failures;
  }

  if (failures == 0) {
    std::cout << "all 12 criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
