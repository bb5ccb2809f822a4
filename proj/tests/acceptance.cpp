// Copyright 2026 The approxdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "approxdd/approximation.hpp"
#include "approxdd/generators.hpp"
#include "approxdd/ops.hpp"
#include "approxdd/oracle.hpp"
#include "approxdd/report.hpp"
#include "approxdd/state.hpp"
#include "approxdd/strategies.hpp"
#include "fidelity_law_util.hpp"
#include "test_util.hpp"

namespace approxdd {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects failed checks and a short summary of what was measured.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_.size() < 4) {
        failures_.push_back(what);
      }
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Verdict verdict() const {
    std::string detail;
    const auto join = [&detail](const std::vector<std::string>& items) {
      for (const std::string& s : items) {
        detail += (detail.empty() ? "" : "; ") + s;
      }
    };
    join(notes_);
    if (!pass_) {
      detail += std::string(detail.empty() ? "" : "; ") + "failed:";
      for (const std::string& s : failures_) {
        detail += " [" + s + "]";
      }
    }
    return {pass_, detail};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(const char* format, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string fmt2(const char* format, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// Stats as JSON with the runtime zeroed, for determinism comparisons.
std::string stats_signature(const SimStats& stats) {
  RunReport r;
  r.stats = stats;
  r.stats.wall_time_seconds = 0.0;
  return report_to_json(r);
}

// Closed form of the period-finding output: the counting register holds x
// after the controlled multiplications, and the inverse transform maps x to
// sum_y exp(-2 pi i x y / M) |y> / sqrt(M).
DenseState shor_closed_form(std::uint64_t modulus, std::uint64_t base) {
  const std::size_t n = std::bit_width(modulus);
  const std::size_t m = std::size_t{1} << (2 * n);
  DenseState out(m << n);
  std::vector<std::uint64_t> power(m);
  std::uint64_t p = 1;
  for (std::size_t x = 0; x < m; ++x) {
    power[x] = p;
    p = p * base % modulus;
  }
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < m; ++x) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((x * y) % m) /
                           static_cast<double>(m);
      out[(y << n) | power[x]] += std::polar(1.0 / static_cast<double>(m), angle);
    }
  }
  return out;
}

Verdict criterion1() {
  Checker check;
  Package pkg(testing::small_config());
  const auto f = testing::build_sample(pkg);
  const Complex amp = lookup_amplitude(f.state, "011");
  check.expect(std::abs(amp - Complex(-1.0 / std::sqrt(10.0))) <= 1e-12, "amplitude at |011>");
  const ContributionMap map = node_contributions(f.state);
  std::vector<double> values;
  for (const auto& e : map.entries()) {
    values.push_back(e.contribution);
  }
  std::sort(values.begin(), values.end());
  const std::vector<double> expected{0.1, 0.1, 0.2, 0.8, 0.8, 1.0};
  check.expect(values.size() == expected.size(), "six contributions");
  for (std::size_t i = 0; i < std::min(values.size(), expected.size()); ++i) {
    check.expect(std::abs(values[i] - expected[i]) <= 1e-12, "contribution value");
  }

  const std::vector<NodeId> victims{f.left_q1};
  const RoundOutcome out = remove_nodes(f.state, victims);
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> pruned_sample{0, 0, 0, 0, 0, r, 0, r};
  check.expect(testing::max_abs_diff(to_dense(out.state), pruned_sample) <= 1e-12, "pruned sample vector");
  check.expect(std::abs(out.round_fidelity - 0.8) <= 1e-12, "round fidelity 0.8");
  const RoundOutcome greedy = approximate_round(f.state, 0.8);
  check.expect(testing::max_abs_diff(to_dense(greedy.state), pruned_sample) <= 1e-12,
               "greedy round at 0.8 reaches the pruned sample");

  Circuit bell(2);
  bell.h(1).cx(1, 0);
  const std::vector<Complex> bell_vec{r, 0, 0, r};
  check.expect(testing::max_abs_diff(to_dense(simulate_exact(pkg, bell).state), bell_vec) <= 1e-12,
               "Bell state");
  const std::vector<Complex> psi{0.5, 0.5, 0.5, 0.5};
  check.expect(std::abs(fidelity(from_dense(pkg, psi), from_dense(pkg, bell_vec)) - 0.5) <= 1e-12,
               "uniform vs Bell fidelity");
  const std::vector<std::size_t> i1{0, 3};
  const std::vector<std::size_t> i2{3};
  const DenseState p1 = dense_truncate(psi, i1);
  const DenseState p2 = dense_truncate(p1, i2);
  check.expect(std::abs(dense_fidelity(psi, p1) - 0.5) <= 1e-12, "successive truncation F(psi, psi')");
  check.expect(std::abs(dense_fidelity(p1, p2) - 0.5) <= 1e-12, "successive truncation F(psi', psi'')");
  check.expect(std::abs(dense_fidelity(psi, p2) - 0.25) <= 1e-12, "successive truncation F(psi, psi'')");
  check.note("sample contributions, removal, Bell state, truncation chain exact");
  return check.verdict();
}

Verdict criterion2() {
  Checker check;
  double product = 0.0;
  double multi = 0.0;
  double invariance = 0.0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const auto r = testing::run_fidelity_law_trial(2 + trial % 7, 0x5EED0000 + trial);
    product = std::max(product, r.product_law_error);
    multi = std::max(multi, r.multi_round_error);
    invariance = std::max(invariance, r.unitary_invariance_error);
  }
  check.expect(product <= 1e-9, "product law");
  check.expect(multi <= 1e-9, "multi-round law");
  check.expect(invariance <= 1e-10, "unitary invariance");
  check.note("1000 trials, n=2..8");
  check.note(fmt2("max errors: product %.2e, multi-round %.2e", product, multi));
  check.note(fmt("invariance %.2e", invariance));
  return check.verdict();
}

Verdict criterion3() {
  Checker check;
  Package pkg;
  std::vector<Circuit> circuits{gen_ghz(12),       gen_qft(12), gen_qft(12, true),
                                gen_supremacy(3, 3, 10, 0), gen_shor_period(15, 7)};
  {
    Circuit qft = gen_qft(10);
    qft.set_initial_state("1011001110");
    circuits.push_back(qft);
    Circuit iqft = gen_qft(10, true);
    iqft.set_initial_state("0100110101");
    circuits.push_back(iqft);
  }
  double worst = 0.0;
  for (const Circuit& c : circuits) {
    const double f = dense_fidelity(to_dense(simulate_exact(pkg, c).state), dense_simulate(c));
    worst = std::max(worst, std::abs(1.0 - f));
    check.expect(std::abs(1.0 - f) <= 1e-9, c.name());
  }
  // shor_21_2 has 15 qubits, beyond the dense simulator; it is compared with
  // the closed-form output state instead.
  for (const auto& [modulus, base] : {std::pair<std::uint64_t, std::uint64_t>{21, 2}, {15, 7}}) {
    const Circuit c = gen_shor_period(modulus, base);
    const double f =
        dense_fidelity(to_dense(simulate_exact(pkg, c).state), shor_closed_form(modulus, base));
    worst = std::max(worst, std::abs(1.0 - f));
    check.expect(std::abs(1.0 - f) <= 1e-9, c.name() + " closed form");
  }
  check.note(std::to_string(circuits.size() + 2) + " circuits");
  check.note(fmt("max |1 - F| = %.2e", worst));
  return check.verdict();
}

struct Criterion4Run {
  std::string signature;
  std::vector<Complex> dense;
};

Verdict criterion4(std::vector<Criterion4Run>* record) {
  Checker check;
  Package pkg;
  std::size_t runs = 0;
  std::size_t rounds = 0;
  double min_margin = 1.0;
  double min_fidelity = 1.0;
  std::size_t below_product = 0;
  std::size_t below_angle = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 4 + seed % 7;
    const Circuit c = gen_random(n, 15 * n, 0xACCE97 + seed);
    const DenseState exact = dense_simulate(c);
    for (double f_final : {0.5, 0.8}) {
      for (double f_round : {0.9, 0.99}) {
        const SimulationResult r =
            simulate_fidelity_driven(pkg, c, {f_final, f_round, Placement::kEven});
        const std::vector<Complex> approx = to_dense(r.state);
        const double f = dense_fidelity(exact, approx);
        ++runs;
        rounds += r.stats.rounds_applied();
        min_fidelity = std::min(min_fidelity, f);
        min_margin = std::min(min_margin, f - r.stats.fidelity_lower_bound);
        below_product += f < r.stats.fidelity_lower_bound - 1e-9 ? 1 : 0;
        // Bures angles obey the triangle inequality, which gives a bound that
        // holds for any sequence of truncations.
        double angle = 0.0;
        for (double rf : r.stats.per_round_fidelities()) {
          angle += std::acos(std::sqrt(std::clamp(rf, 0.0, 1.0)));
        }
        const double angle_bound =
            angle >= std::numbers::pi / 2 ? 0.0 : std::pow(std::cos(angle), 2);
        below_angle += f < angle_bound - 1e-9 ? 1 : 0;
        check.expect(f >= f_final - 1e-9, c.name() + " below f_final");
        check.expect(f >= r.stats.fidelity_lower_bound - 1e-9, c.name() + " below bound");
        check.expect(r.stats.fidelity_lower_bound >= f_final - 1e-12, c.name() + " bound");
        if (record != nullptr && seed < 5) {
          record->push_back({stats_signature(r.stats), approx});
        }
      }
    }
    pkg.collect_garbage();
  }
  check.note(std::to_string(runs) + " runs, " + std::to_string(rounds) + " rounds");
  check.note(fmt2("min oracle fidelity %.4f, min (oracle - bound) %.2e", min_fidelity,
                  min_margin));
  check.note(std::to_string(below_product) + " runs below the product bound, " +
             std::to_string(below_angle) + " below the angle bound");
  return check.verdict();
}

Verdict criterion5(std::vector<Criterion4Run>* record) {
  Checker check;
  Package pkg;
  const std::vector<std::array<std::uint64_t, 4>> cases{{15, 7, 3, 5}, {21, 2, 3, 7}};
  for (const auto& [modulus, base, p, q] : cases) {
    const Circuit c = gen_shor_period(modulus, base);
    const std::size_t n = std::bit_width(modulus);
    const SimulationResult exact = simulate_exact(pkg, c);
    for (Placement placement : {Placement::kMarkers, Placement::kEven}) {
      const FidelityDrivenConfig cfg{0.5, 0.9, placement};
      const RoundPlan plan = plan_rounds(c, cfg);
      const SimulationResult r = simulate_fidelity_driven(pkg, c, cfg);
      const std::vector<Complex> amps = to_dense(r.state);
      const auto factors = shor_postprocess(counting_distribution(amps, n), modulus, base);
      const std::string tag =
          c.name() + (placement == Placement::kMarkers ? " markers" : " even");
      check.expect(plan.rounds() <= 6, tag + " plans <= 6 rounds");
      check.expect(factors.has_value() && factors->first == p && factors->second == q,
                   tag + " factors");
      const double f = fidelity(exact.state, r.state);
      check.expect(f >= 0.5 - 1e-9, tag + " fidelity");
      check.note(tag + fmt2(": rounds %.0f, oracle F %.4f", static_cast<double>(r.stats.rounds_applied()), f));
      if (record != nullptr) {
        record->push_back({stats_signature(r.stats), amps});
      }
    }
  }
  return check.verdict();
}

Verdict criterion6(std::vector<Criterion4Run>* record) {
  Checker check;
  Package pkg;
  const Circuit c = gen_supremacy(4, 4, 12, 1);
  const SimulationResult exact = simulate_exact(pkg, c);
  std::vector<SimStats> stats;
  for (double f_round : {0.99, 0.95}) {
    const SimulationResult r = simulate_memory_driven(pkg, c, {500, f_round});
    const double f = fidelity(exact.state, r.state);
    check.expect(r.stats.max_dd_size < exact.stats.max_dd_size,
                 fmt("(a) f_round %.2f: max size not below exact", f_round));
    check.expect(f >= r.stats.fidelity_lower_bound - 1e-9, fmt("f_round %.2f: bound", f_round));
    check.note(fmt("f_round %.2f", f_round) +
               fmt2(": max %.0f vs exact %.0f", static_cast<double>(r.stats.max_dd_size),
                    static_cast<double>(exact.stats.max_dd_size)) +
               fmt2(", rounds %.0f, bound %.4f", static_cast<double>(r.stats.rounds_applied()),
                    r.stats.fidelity_lower_bound));
    stats.push_back(r.stats);
    if (record != nullptr) {
      record->push_back({stats_signature(r.stats), to_dense(r.state)});
    }
    pkg.collect_garbage();
  }
  check.expect(stats[1].max_dd_size <= stats[0].max_dd_size, "(b) size ordering");
  check.expect(stats[1].fidelity_lower_bound <= stats[0].fidelity_lower_bound,
               "(b) bound ordering");
  return check.verdict();
}

Verdict criterion7(const std::vector<Criterion4Run>& first) {
  Checker check;
  std::vector<Criterion4Run> second;
  (void)criterion4(&second);
  (void)criterion5(&second);
  (void)criterion6(&second);
  check.expect(first.size() == second.size(), "same number of runs");
  std::size_t identical = 0;
  for (std::size_t i = 0; i < std::min(first.size(), second.size()); ++i) {
    const bool same = first[i].signature == second[i].signature && first[i].dense == second[i].dense;
    identical += same ? 1 : 0;
    check.expect(same, "run " + std::to_string(i) + " differs");
  }
  check.note(std::to_string(identical) + "/" + std::to_string(first.size()) +
             " repeated runs identical (stats without runtime, dense final states)");
  return check.verdict();
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace approxdd

int main() {
  using approxdd::Verdict;
  std::vector<approxdd::Criterion4Run> record;
  const std::vector<approxdd::Criterion> criteria{
      {1, "reference examples", 1.0, [] { return approxdd::criterion1(); }},
      {2, "fidelity product laws", 30.0, [] { return approxdd::criterion2(); }},
      {3, "oracle equivalence", 60.0, [] { return approxdd::criterion3(); }},
      {4, "fidelity-driven guarantee", 60.0, [&] { return approxdd::criterion4(&record); }},
      {5, "Shor end-to-end", 120.0, [&] { return approxdd::criterion5(&record); }},
      {6, "memory-driven behavior", 600.0, [&] { return approxdd::criterion6(&record); }},
      {7, "determinism", 900.0, [&] { return approxdd::criterion7(record); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      v.pass = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) +
                  " s budget";
    }
    all = all && v.pass;
    std::printf("CRITERION %d %s (%s, %.2f s): %s\n", c.id, v.pass ? "PASS" : "FAIL", c.title,
                seconds, v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
