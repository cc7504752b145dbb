// Copyright 2026 The chandisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chandisc/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "chandisc/closed_forms.hpp"
#include "chandisc/discrimination.hpp"
#include "chandisc/evaluation.hpp"

namespace chandisc {

namespace {

constexpr std::array<double, 3> kEqualWeights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

class Recorder {
 public:
  Recorder(int criterion, const VerificationOptions& opts) : criterion_(criterion), opts_(opts) {}

  void within(std::string id, std::string claim, double expected, double tol, const std::function<double()>& f) {
    record(std::move(id), std::move(claim), Relation::within, expected, tol * opts_.tolerance_scale, f);
  }
  void at_most(std::string id, std::string claim, double limit, double tol, const std::function<double()>& f) {
    record(std::move(id), std::move(claim), Relation::at_most, limit, tol * opts_.tolerance_scale, f);
  }
  void less_than(std::string id, std::string claim, double limit, const std::function<double()>& f) {
    record(std::move(id), std::move(claim), Relation::less_than, limit, 0.0, f);
  }
  void greater_than(std::string id, std::string claim, double limit, const std::function<double()>& f) {
    record(std::move(id), std::move(claim), Relation::greater_than, limit, 0.0, f);
  }

  std::uint64_t seed(std::uint64_t salt) const { return opts_.seed * 1000003ULL + 7919ULL * criterion_ + salt; }

  OptimizerOptions optimizer(std::uint64_t salt, int restarts = 32) const {
    OptimizerOptions o;
    o.restarts = restarts;
    o.seed = seed(salt);
    return o;
  }

  std::vector<ScenarioReport> take() { return std::move(reports_); }

 private:
  void record(std::string id, std::string claim, Relation rel, double expected, double tol,
              const std::function<double()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    ScenarioReport r;
    r.criterion = criterion_;
    r.id = std::move(id);
    r.claim = std::move(claim);
    r.relation = rel;
    r.expected = expected;
    r.tolerance = tol;
    try {
      r.computed = f();
      switch (rel) {
        case Relation::within: r.passed = std::abs(r.computed - expected) <= tol; break;
        case Relation::at_most: r.passed = r.computed <= expected + tol; break;
        case Relation::less_than: r.passed = r.computed < expected; break;
        case Relation::greater_than: r.passed = r.computed > expected; break;
      }
    } catch (const std::exception& e) {
      r.computed = std::nan("");
      r.passed = false;
      r.claim += " [error: " + std::string(e.what()) + "]";
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    reports_.push_back(std::move(r));
  }

  int criterion_;
  VerificationOptions opts_;
  std::vector<ScenarioReport> reports_;
};

std::string tag(const char* prefix, long value) { return std::string(prefix) + std::to_string(value); }

void depolarizing_single_constancy(Recorder& rec) {
  for (Index d : {2, 3, 4}) {
    const Channel a = make_depolarizing(d, 0.9);
    const Channel b = make_depolarizing(d, 0.3);
    const double closed = depolarizing_single_closed(d, 0.9, 0.3);
    std::vector<double> values;
    for (int i = 0; i < 100; ++i) {
      values.push_back(discrim_fixed_single(a, b, random_pure(d, rec.seed(static_cast<std::uint64_t>(d * 1000 + i))))
                           .probability);
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    rec.within(tag("spread_d", d), "100 random pure probes give one value", 0.0, 1e-9, [&] { return *hi - *lo; });
    rec.within(tag("closed_d", d), "random-probe value equals the pure-probe closed form", closed, 1e-12, [&] {
      return *std::max_element(values.begin(), values.end(),
                               [&](double x, double y) { return std::abs(x - closed) < std::abs(y - closed); });
    });
    rec.within(tag("optimizer_d", d), "single-probe optimizer reaches the closed form", closed, 1e-6, [&] {
      return optimize_single(a, b, rec.optimizer(static_cast<std::uint64_t>(d))).probability;
    });
  }
}

void depolarizing_entangled_optimum(Recorder& rec) {
  const Channel a = make_depolarizing(2, 0.9);
  const Channel b = make_depolarizing(2, 0.3);
  rec.within("optimizer_ent", "entangled optimizer reaches the maximally entangled value", 0.725, 1e-5,
             [&] { return optimize_entangled(a, b, rec.optimizer(1)).probability; });
  rec.within("f_norm_half", "||F|| = 3/2 at g = 1/2", 1.5, 1e-12,
             [&] { return depolarizing_qubit_g_norm(0.5, 0.9, 0.3).norm; });
  rec.within("g_curve", "g-curve formula matches fixed-probe evaluation (max deviation, 50 points)", 0.0, 1e-9, [&] {
    std::mt19937_64 rng(rec.seed(2));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double g = i / 49.0;
      const double formula = depolarizing_qubit_g_norm(g, 0.9, 0.3).probability;
      const double fixed = discrim_fixed_entangled(a, b, nonmax_qubit(g, angle(rng))).probability;
      worst = std::max(worst, std::abs(formula - fixed));
    }
    return worst;
  });
  rec.greater_than("g_monotone", "smallest step of the g-curve on [0, 1/2] is positive", 0.0, [&] {
    double smallest = 1.0;
    double previous = depolarizing_qubit_g_norm(0.0, 0.9, 0.3).probability;
    for (int i = 1; i < 50; ++i) {
      const double current = depolarizing_qubit_g_norm(0.5 * i / 49.0, 0.9, 0.3).probability;
      smallest = std::min(smallest, current - previous);
      previous = current;
    }
    return smallest;
  });
}

void dephasing_sufficiency(Recorder& rec) {
  for (Index d = 2; d <= 5; ++d) {
    const Channel a = make_dephasing(d, 0.9);
    const Channel b = make_dephasing(d, 0.2);
    rec.within(tag("optimizer_single_d", d), "single-probe optimizer reaches (1 + |r1 - r2|)/2", 0.85, 1e-5,
               [&] { return optimize_single(a, b, rec.optimizer(static_cast<std::uint64_t>(d))).probability; });
    rec.within(tag("uniform_d", d), "uniform superposition attains the optimum", 0.85, 1e-12,
               [&] { return discrim_fixed_single(a, b, uniform_superposition(d)).probability; });
    rec.at_most(tag("optimizer_ent_d", d), "entangled probes do not exceed the single-probe optimum", 0.85, 1e-5,
                [&] { return optimize_entangled(a, b, rec.optimizer(static_cast<std::uint64_t>(10 + d))).probability; });
  }
}

void generalized_dephasing(Recorder& rec) {
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(1, 1) = std::polar(1.0, std::numbers::pi / 3.0);
  const Channel a = make_generalized_dephasing(u, 0.8);
  const Channel b = make_generalized_dephasing(u, 0.2);
  double closed = 0.0;
  double single = 0.0;
  rec.within("closed", "hull-distance closed form for u = diag(1, e^{i pi/3})", 0.65, 1e-9,
             [&] { return closed = gen_dephasing_closed(u, 0.8, 0.2, rec.seed(1)); });
  rec.within("optimizer_single", "single-probe optimizer matches the closed form", 0.65, 1e-5,
             [&] { return single = optimize_single(a, b, rec.optimizer(2)).probability; });
  rec.at_most("entangled_gain", "entangled optimizer gains nothing over the single-probe optimizer", 0.0, 1e-5,
              [&] { return optimize_entangled(a, b, rec.optimizer(3)).probability - single; });
  (void)closed;
}

void amplitude_damping_regimes(Recorder& rec) {
  {
    const Channel a = make_amplitude_damping(0.81);
    const Channel b = make_amplitude_damping(0.36);
    rec.within("strong_single_closed", "(0.81, 0.36) single-probe optimum", 0.725, 1e-9,
               [&] { return ad_single_closed(0.81, 0.36).probability; });
    rec.within("strong_theta", "(0.81, 0.36) optimal polar angle is pi", std::numbers::pi, 1e-12,
               [&] { return ad_single_closed(0.81, 0.36).theta; });
    rec.within("strong_single_fixed", "(0.81, 0.36) probe |1> attains the single-probe closed form", 0.725, 1e-9,
               [&] { return discrim_fixed_single(a, b, bloch_qubit(std::numbers::pi, 0.0)).probability; });
    rec.within("strong_maxent_closed", "(0.81, 0.36) maximally entangled value", 0.65, 1e-9,
               [&] { return ad_maxent_closed(0.81, 0.36); });
    rec.within("strong_maxent_fixed", "(0.81, 0.36) |phi+> evaluation matches the closed form", 0.65, 1e-9,
               [&] { return discrim_fixed_entangled(a, b, max_entangled(2)).probability; });
    rec.within("strong_optimizer", "(0.81, 0.36) single-probe optimizer matches the closed form", 0.725, 1e-5,
               [&] { return optimize_single(a, b, rec.optimizer(1)).probability; });
    rec.greater_than("strong_order", "(0.81, 0.36) single minus maximally entangled is positive", 0.0,
                     [&] { return ad_single_closed(0.81, 0.36).probability - ad_maxent_closed(0.81, 0.36); });
  }
  {
    const Channel a = make_amplitude_damping(0.04);
    const Channel b = make_amplitude_damping(0.01);
    constexpr double single = 0.526207120918048;
    constexpr double theta = 1.6698593718618788;
    constexpr double maxent = 0.5290296855201959;
    rec.within("weak_single_closed", "(0.04, 0.01) single-probe optimum", single, 1e-9,
               [&] { return ad_single_closed(0.04, 0.01).probability; });
    rec.within("weak_theta", "(0.04, 0.01) optimal polar angle", theta, 1e-9,
               [&] { return ad_single_closed(0.04, 0.01).theta; });
    rec.within("weak_single_fixed", "(0.04, 0.01) probe at the optimal angle attains the closed form", single, 1e-9,
               [&] { return discrim_fixed_single(a, b, bloch_qubit(theta, 0.0)).probability; });
    rec.within("weak_maxent_closed", "(0.04, 0.01) maximally entangled value", maxent, 1e-9,
               [&] { return ad_maxent_closed(0.04, 0.01); });
    rec.within("weak_maxent_fixed", "(0.04, 0.01) |phi+> evaluation matches the closed form", maxent, 1e-9,
               [&] { return discrim_fixed_entangled(a, b, max_entangled(2)).probability; });
    rec.within("weak_optimizer", "(0.04, 0.01) single-probe optimizer matches the closed form", single, 1e-5,
               [&] { return optimize_single(a, b, rec.optimizer(2)).probability; });
    rec.greater_than("weak_order", "(0.04, 0.01) maximally entangled minus single is positive", 0.0,
                     [&] { return ad_maxent_closed(0.04, 0.01) - ad_single_closed(0.04, 0.01).probability; });
  }
  rec.within("grid_sign", "regime sign rule on a 200-point grid (mismatch count)", 0.0, 0.0, [&] {
    int mismatches = 0;
    for (int i = 0; i < 20; ++i) {
      const double mu1 = 0.025 + 0.05 * i;
      for (int j = 1; j <= 10; ++j) {
        const double mu2 = 0.05 + 0.09 * (j - 1);
        const double s = std::sqrt(mu1) + std::sqrt(mu2);
        const double regime = s * s - 0.5;
        if (std::abs(regime) < 1e-3) continue;
        const double diff = ad_single_closed(mu1, mu2).probability - ad_maxent_closed(mu1, mu2);
        if ((diff > 0.0) != (regime > 0.0)) ++mismatches;
      }
    }
    return static_cast<double>(mismatches);
  });
}

void nonmaximal_advantage(Recorder& rec) {
  const Channel a = make_amplitude_damping(0.36);
  const Channel b = make_amplitude_damping(0.09);
  const double p = 0.1;
  double fixed = 0.0;
  rec.within("schmidt_fixed", "Schmidt-probe evaluation matches the closed-form norm", ad_nonmax_norm(p, 0.36, 0.09).probability,
             1e-9, [&] { return fixed = discrim_fixed_entangled(a, b, schmidt_pair(p), 0.5, ProbeClass::nonmax).probability; });
  rec.within("schmidt_norm", "trace norm of the Schmidt-probe output difference", 0.5454053570954059, 1e-9,
             [&] { return ad_nonmax_norm(p, 0.36, 0.09).norm; });
  rec.greater_than("margin_closed", "Schmidt probe beats the single-probe closed form by more than 1e-3", 1e-3,
                   [&] { return fixed - ad_single_closed(0.36, 0.09).probability; });
  rec.greater_than("margin_optimizer", "Schmidt probe beats the single-probe optimizer by more than 1e-3", 1e-3,
                   [&] { return fixed - optimize_single(a, b, rec.optimizer(1)).probability; });
  rec.within("condition_lhs", "(sqrt(mu1) + sqrt(mu2))^2", 0.81, 1e-12, [&] {
    const double s = std::sqrt(0.36) + std::sqrt(0.09);
    return s * s;
  });
  rec.within("condition", "(sqrt(mu1) + sqrt(mu2))^2 < 1 - p holds (1 = true)", 1.0, 0.0,
             [&] { return ad_nonmax_beats_single(p, 0.36, 0.09) ? 1.0 : 0.0; });
}

void qutrit_mixed_unitary(Recorder& rec) {
  const auto [a, b] = make_qutrit_pair(kEqualWeights);
  const auto [ea, eb] = qutrit_ensembles(kEqualWeights);
  const auto pairs = pair_ensembles(ea, eb);
  double bound = 0.0;
  rec.within("zeta_perfect", "zeta(1/2, 1/2) separates the pair perfectly", 1.0, 1e-9,
             [&] { return discrim_fixed_entangled(a, b, zeta_probe(0.5, 0.5)).probability; });
  rec.at_most("single_ceiling", "64-restart single-probe optimum stays below 1 - 1e-3", 1.0 - 1e-3, 0.0,
              [&] { return optimize_single(a, b, rec.optimizer(1, 64)).probability; });
  rec.less_than("maxent_bound", "maximally entangled trace-norm bound is below 2", 2.0,
                [&] { return bound = mixed_unitary_maxent_bound(pairs); });
  rec.at_most("maxent_fixed", "|phi+> evaluation respects the bound", 0.5 + 0.25 * mixed_unitary_maxent_bound(pairs),
              1e-12, [&] { return discrim_fixed_entangled(a, b, max_entangled(3)).probability; });
  (void)bound;
}

void six_level_mixed_unitary(Recorder& rec) {
  const auto [a, b] = make_six_level_pair(kEqualWeights);
  const auto [ea, eb] = six_level_ensembles(kEqualWeights);
  const auto pairs = pair_ensembles(ea, eb);
  const double cap = 0.5 + 0.25 * mixed_unitary_maxent_bound(pairs);
  rec.within("single_perfect", "probe |0> separates the pair perfectly", 1.0, 1e-9,
             [&] { return discrim_fixed_single(a, b, basis_state(6, 0)).probability; });
  rec.within("single_bound", "single-probe bound at |0> equals 2", 2.0, 1e-12,
             [&] { return mixed_unitary_single_bound(pairs, basis_state(6, 0)); });
  rec.greater_than("min_trace_overlap", "every |Tr(V_k^dagger W_k)| is nonzero (smallest)", 0.0, [&] {
    double smallest = 1e300;
    for (const auto& pr : pairs) smallest = std::min(smallest, std::abs((pr.v.adjoint() * pr.w).trace()));
    return smallest;
  });
  rec.less_than("maxent_cap", "maximally entangled probability cap is below 1 - 1e-3", 1.0 - 1e-3, [&] { return cap; });
  rec.at_most("maxent_fixed", "|phi+> evaluation respects the cap", cap, 1e-12,
              [&] { return discrim_fixed_entangled(a, b, max_entangled(6)).probability; });
}

void erasure_independence(Recorder& rec) {
  for (Index d : {2, 3}) {
    const Channel a = make_erasure(d, 0.8);
    const Channel b = make_erasure(d, 0.3);
    rec.within(tag("max_deviation_d", d), "200 random single and bipartite probes all give 0.75", 0.0, 1e-9, [&] {
      double worst = 0.0;
      for (int i = 0; i < 200; ++i) {
        const auto s = rec.seed(static_cast<std::uint64_t>(d * 1000 + i));
        const double value = i % 2 == 0 ? discrim_fixed_single(a, b, random_pure(d, s)).probability
                                        : discrim_fixed_entangled(a, b, random_bipartite(d, d, s)).probability;
        worst = std::max(worst, std::abs(value - 0.75));
      }
      return worst;
    });
  }
}

void framework_sanity(Recorder& rec) {
  rec.within("helstrom", "Helstrom value for |0> versus |+>", 0.5 * (1.0 + 1.0 / std::sqrt(2.0)), 1e-12, [&] {
    return helstrom(basis_state(2, 0).density(), uniform_superposition(2).density());
  });
  rec.within("product_reduction", "product probes reduce to their A factor (max deviation, 50 probes)", 0.0, 1e-10,
             [&] {
               const auto [la, lb] = make_qutrit_pair(kEqualWeights);
               const std::vector<std::pair<Channel, Channel>> families{
                   {make_amplitude_damping(0.81), make_amplitude_damping(0.36)},
                   {make_depolarizing(3, 0.9), make_depolarizing(3, 0.3)},
                   {la, lb},
                   {make_erasure(2, 0.8), make_erasure(2, 0.3)},
                   {make_dephasing(4, 0.9), make_dephasing(4, 0.2)}};
               double worst = 0.0;
               for (int i = 0; i < 50; ++i) {
                 const auto& [a, b] = families[static_cast<std::size_t>(i) % families.size()];
                 const Index d = a.dim_in();
                 const auto pa = random_pure(d, rec.seed(static_cast<std::uint64_t>(2 * i)));
                 const auto pb = random_pure(d, rec.seed(static_cast<std::uint64_t>(2 * i + 1)));
                 const double single = discrim_fixed_single(a, b, pa).probability;
                 const double product =
                     discrim_fixed_entangled(a, b, product_probe(pa, pb), 0.5, ProbeClass::product).probability;
                 worst = std::max(worst, std::abs(single - product));
               }
               return worst;
             });

  std::vector<Channel> builtins;
  for (double x : {0.1, 0.5, 0.9}) {
    for (Index d : {2, 3, 4}) {
      builtins.push_back(make_depolarizing(d, x));
      builtins.push_back(make_dephasing(d, x));
      builtins.push_back(make_erasure(d, x));
    }
    builtins.push_back(make_amplitude_damping(x));
    ComplexMatrix u = ComplexMatrix::Identity(2, 2);
    u(1, 1) = std::polar(1.0, std::numbers::pi / 3.0);
    builtins.push_back(make_generalized_dephasing(u, x));
  }
  for (auto* make : {&make_qutrit_pair, &make_six_level_pair}) {
    const auto [a, b] = make(kEqualWeights);
    builtins.push_back(a);
    builtins.push_back(b);
  }
  rec.within("cptp_trace", "largest sum K^dagger K - I residual over built-in channels", 0.0, 1e-10, [&] {
    double worst = 0.0;
    for (const auto& ch : builtins) worst = std::max(worst, diagnose_kraus(ch.dim_in(), ch.dim_out(), ch.kraus()).trace_residual);
    return worst;
  });
  rec.at_most("cptp_choi", "negated smallest Choi eigenvalue over built-in channels", 0.0, 1e-10, [&] {
    double lowest = 1.0;
    for (const auto& ch : builtins) {
      lowest = std::min(lowest, diagnose_kraus(ch.dim_in(), ch.dim_out(), ch.kraus()).choi_min_eigenvalue);
    }
    return -lowest;
  });
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::within: return "~=";
    case Relation::at_most: return "<=";
    case Relation::less_than: return "<";
    case Relation::greater_than: return ">";
  }
  return "?";
}

std::string_view criterion_title(int criterion) {
  switch (criterion) {
    case 1: return "depolarizing single-probe constancy";
    case 2: return "depolarizing entangled optimum";
    case 3: return "dephasing single-probe sufficiency";
    case 4: return "generalized dephasing hull formula";
    case 5: return "amplitude-damping regimes";
    case 6: return "non-maximally entangled advantage";
    case 7: return "qutrit mixed-unitary pair";
    case 8: return "six-level mixed-unitary pair";
    case 9: return "erasure probe independence";
    case 10: return "framework sanity";
    default: return "unknown";
  }
}

std::vector<ScenarioReport> run_criterion(int criterion, const VerificationOptions& opts) {
  Recorder rec(criterion, opts);
  switch (criterion) {
    case 1: depolarizing_single_constancy(rec); break;
    case 2: depolarizing_entangled_optimum(rec); break;
    case 3: dephasing_sufficiency(rec); break;
    case 4: generalized_dephasing(rec); break;
    case 5: amplitude_damping_regimes(rec); break;
    case 6: nonmaximal_advantage(rec); break;
    case 7: qutrit_mixed_unitary(rec); break;
    case 8: six_level_mixed_unitary(rec); break;
    case 9: erasure_independence(rec); break;
    case 10: framework_sanity(rec); break;
    default: throw DomainError("criterion must lie in 1.." + std::to_string(kCriterionCount));
  }
  return rec.take();
}

std::vector<ScenarioReport> run_verification(const VerificationOptions& opts) {
  std::vector<ScenarioReport> all;
  for (int c = 1; c <= kCriterionCount; ++c) {
    auto part = run_criterion(c, opts);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

nlohmann::json reports_to_json(const std::vector<ScenarioReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    list.push_back({{"criterion", r.criterion},
                    {"scenario", r.id},
                    {"claim", r.claim},
                    {"relation", std::string(to_string(r.relation))},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"tolerance", r.tolerance},
                    {"status", r.passed ? "pass" : "fail"},
                    {"runtime_ms", r.runtime_ms}});
  }
  return {{"reports", std::move(list)}, {"total", reports.size()}, {"failed", failed}};
}

void print_report_table(std::ostream& out, const std::vector<ScenarioReport>& reports) {
  char line[512];
  std::snprintf(line, sizeof(line), "%-3s %-22s %-3s %-22s %-22s %-9s %-6s %s\n", "#", "scenario", "rel", "expected",
                "computed", "tol", "status", "claim");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof(line), "%-3d %-22s %-3s %-22s %-22s %-9.1e %-6s %s\n", r.criterion, r.id.c_str(),
                  std::string(to_string(r.relation)).c_str(), format_double(r.expected).c_str(),
                  format_double(r.computed).c_str(), r.tolerance, r.passed ? "pass" : "FAIL", r.claim.c_str());
    out << line;
  }
}

}  // namespace chandisc
