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

#include "chandisc/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace chandisc {

namespace {

double require_param(const FamilySpec& spec, const std::string& name) {
  const auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw DomainError("family '" + spec.family + "' requires parameter --" + name);
  }
  return it->second;
}

Index require_dim(const FamilySpec& spec) {
  const double d = require_param(spec, "d");
  if (!(d >= 2.0) || d != std::floor(d) || d > 64.0) {
    throw DomainError("--d must be an integer between 2 and 64");
  }
  return static_cast<Index>(d);
}

double parse_number(const std::string& text, const std::string& context) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin < end && *begin == ' ') ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) throw DomainError("cannot parse number '" + text + "' in " + context);
  return value;
}

std::complex<double> parse_complex(const std::string& text, const std::string& context) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_number(text, context), 0.0};
  return {parse_number(text.substr(0, comma), context), parse_number(text.substr(comma + 1), context)};
}

std::optional<double> parse_weight_suffix(const std::string& rest, char key, const std::string& text) {
  if (rest.empty()) return std::nullopt;
  if (rest.size() < 3 || rest[0] != ':' || rest[1] != key || rest[2] != '=') {
    throw DomainError("malformed probe class '" + text + "'");
  }
  return parse_number(rest.substr(3), "probe class '" + text + "'");
}

double family_weight(const ProbeSpec& probe, const FamilySpec* spec, const char* name) {
  if (probe.weight) return *probe.weight;
  if (spec) {
    const auto it = spec->params.find(name);
    if (it != spec->params.end()) return it->second;
  }
  throw DomainError("probe class '" + probe.text + "' needs " + name + "=<x>");
}

std::string named(const char* name, double value) { return std::string(name) + "=" + format_double(value); }

DiscriminationResult closed_result(double probability, ProbeClass probe_class, ProbeValue probe = {},
                                   std::string params = {}) {
  DiscriminationResult res;
  res.probability = probability;
  res.probe_class = probe_class;
  res.method = Method::closed_form;
  res.probe = std::move(probe);
  res.probe_params = std::move(params);
  return res;
}

ComplexMatrix diagonal_unitary(const std::vector<double>& phases) {
  if (phases.empty()) throw DomainError("gen-dephasing requires --u-phases");
  ComplexMatrix u = ComplexMatrix::Zero(static_cast<Index>(phases.size()), static_cast<Index>(phases.size()));
  for (std::size_t k = 0; k < phases.size(); ++k) u(static_cast<Index>(k), static_cast<Index>(k)) = std::polar(1.0, phases[k]);
  return u;
}

DiscriminationResult evaluate_closed(const FamilySpec& spec, const ProbeSpec& probe) {
  const std::string& f = spec.family;
  const bool single = probe.kind == ProbeKind::single_closed;
  const bool maxent = probe.kind == ProbeKind::maxent_closed;

  if (f == "depolarizing") {
    const Index d = require_dim(spec);
    const double q1 = require_param(spec, "q1");
    const double q2 = require_param(spec, "q2");
    if (single) return closed_result(depolarizing_single_closed(d, q1, q2), ProbeClass::single, basis_state(d, 0));
    if (maxent) return closed_result(depolarizing_maxent_closed(d, q1, q2), ProbeClass::max_entangled, max_entangled(d));
    if (probe.kind == ProbeKind::nonmax_closed) {
      if (d != 2) throw DomainError("nonmax-closed is only available for qubit depolarizing channels");
      const double g = family_weight(probe, &spec, "g");
      const auto value = depolarizing_qubit_g_norm(g, q1, q2);
      return closed_result(value.probability, ProbeClass::nonmax, nonmax_qubit(g, 0.0),
                           named("g", g) + ";norm=" + format_double(value.norm));
    }
  } else if (f == "dephasing") {
    const Index d = require_dim(spec);
    const double value = dephasing_closed(require_param(spec, "r1"), require_param(spec, "r2"));
    // the maximally entangled probe attains the same optimum
    if (single) return closed_result(value, ProbeClass::single, uniform_superposition(d));
    if (maxent) return closed_result(value, ProbeClass::max_entangled, max_entangled(d));
  } else if (f == "gen-dephasing") {
    const ComplexMatrix u = diagonal_unitary(spec.u_phases);
    const double r1 = require_param(spec, "r1");
    const double r2 = require_param(spec, "r2");
    if (single) return closed_result(gen_dephasing_closed(u, r1, r2), ProbeClass::single);
    if (maxent) {
      const double d = static_cast<double>(u.rows());
      const double overlap = std::norm(u.trace()) / (d * d);
      const double value = 0.5 * (1.0 + std::abs(r1 - r2) * std::sqrt(std::max(0.0, 1.0 - overlap)));
      return closed_result(value, ProbeClass::max_entangled, max_entangled(u.rows()));
    }
  } else if (f == "amplitude-damping") {
    const double mu1 = require_param(spec, "mu1");
    const double mu2 = require_param(spec, "mu2");
    if (single) {
      const auto opt = ad_single_closed(mu1, mu2);
      return closed_result(opt.probability, ProbeClass::single, bloch_qubit(opt.theta, 0.0), named("theta", opt.theta));
    }
    if (maxent) return closed_result(ad_maxent_closed(mu1, mu2), ProbeClass::max_entangled, max_entangled(2));
    if (probe.kind == ProbeKind::schmidt_closed) {
      const double p = family_weight(probe, &spec, "p");
      const auto value = ad_nonmax_norm(p, mu1, mu2);
      return closed_result(value.probability, ProbeClass::nonmax, schmidt_pair(p),
                           named("p", p) + ";norm=" + format_double(value.norm));
    }
  } else if (f == "erasure") {
    const Index d = require_dim(spec);
    const double value = erasure_closed(require_param(spec, "eps1"), require_param(spec, "eps2"));
    if (single) return closed_result(value, ProbeClass::single, basis_state(d, 0));
    if (maxent) return closed_result(value, ProbeClass::max_entangled, max_entangled(d));
  }
  throw DomainError("no closed form for probe class '" + probe.text + "' and family '" + f + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::pair<Channel, Channel> build_channel_pair(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "depolarizing") {
    const Index d = require_dim(spec);
    return {make_depolarizing(d, require_param(spec, "q1")), make_depolarizing(d, require_param(spec, "q2"))};
  }
  if (f == "dephasing") {
    const Index d = require_dim(spec);
    return {make_dephasing(d, require_param(spec, "r1")), make_dephasing(d, require_param(spec, "r2"))};
  }
  if (f == "gen-dephasing") {
    const ComplexMatrix u = diagonal_unitary(spec.u_phases);
    return {make_generalized_dephasing(u, require_param(spec, "r1")),
            make_generalized_dephasing(u, require_param(spec, "r2"))};
  }
  if (f == "amplitude-damping") {
    return {make_amplitude_damping(require_param(spec, "mu1")), make_amplitude_damping(require_param(spec, "mu2"))};
  }
  if (f == "erasure") {
    const Index d = require_dim(spec);
    return {make_erasure(d, require_param(spec, "eps1")), make_erasure(d, require_param(spec, "eps2"))};
  }
  if (f == "mixed-unitary-d3") return make_qutrit_pair(spec.weights);
  if (f == "mixed-unitary-d6") return make_six_level_pair(spec.weights);
  throw DomainError("unknown channel family '" + f + "'");
}

ProbeSpec parse_probe_class(const std::string& text) {
  ProbeSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon);

  const auto no_suffix = [&](ProbeKind kind) {
    if (!rest.empty()) throw DomainError("probe class '" + text + "' takes no arguments");
    spec.kind = kind;
    return spec;
  };

  if (head == "single") {
    spec.kind = ProbeKind::single;
    if (!rest.empty()) {
      // single:|k>
      if (rest.size() < 4 || rest[1] != '|' || rest.back() != '>') {
        throw DomainError("malformed probe class '" + text + "', expected single:|k>");
      }
      const double k = parse_number(rest.substr(2, rest.size() - 3), "probe class '" + text + "'");
      if (k < 0 || k != std::floor(k)) throw DomainError("basis index must be a non-negative integer");
      spec.basis_index = static_cast<Index>(k);
    }
    return spec;
  }
  if (head == "product") return no_suffix(ProbeKind::product);
  if (head == "maxent") return no_suffix(ProbeKind::maxent);
  if (head == "optimize-single") return no_suffix(ProbeKind::optimize_single);
  if (head == "optimize-ent") return no_suffix(ProbeKind::optimize_ent);
  if (head == "single-closed") return no_suffix(ProbeKind::single_closed);
  if (head == "maxent-closed") return no_suffix(ProbeKind::maxent_closed);
  if (head == "nonmax" || head == "nonmax-closed") {
    spec.kind = head == "nonmax" ? ProbeKind::nonmax : ProbeKind::nonmax_closed;
    spec.weight = parse_weight_suffix(rest, 'g', text);
    return spec;
  }
  if (head == "schmidt" || head == "schmidt-closed") {
    spec.kind = head == "schmidt" ? ProbeKind::schmidt : ProbeKind::schmidt_closed;
    spec.weight = parse_weight_suffix(rest, 'p', text);
    return spec;
  }
  if (head == "zeta") {
    spec.kind = ProbeKind::zeta;
    const auto c1_pos = rest.find(":c1=");
    const auto c2_pos = rest.find(",c2=");
    if (c1_pos != 0 || c2_pos == std::string::npos) {
      throw DomainError("malformed probe class '" + text + "', expected zeta:c1=<re,im>,c2=<re,im>");
    }
    spec.c1 = parse_complex(rest.substr(4, c2_pos - 4), "probe class '" + text + "'");
    spec.c2 = parse_complex(rest.substr(c2_pos + 4), "probe class '" + text + "'");
    return spec;
  }
  throw DomainError("unknown probe class '" + text + "'");
}

DiscriminationResult evaluate_channels(const Channel& ch1, const Channel& ch2, const ProbeSpec& probe, double p1,
                                       const OptimizerOptions& opts) {
  const Index d = ch1.dim_in();
  const auto require_qubit = [&] {
    if (d != 2) throw DomainError("probe class '" + probe.text + "' needs qubit channels");
  };
  switch (probe.kind) {
    case ProbeKind::single: {
      auto res = discrim_fixed_single(ch1, ch2, basis_state(d, probe.basis_index), p1);
      res.probe_params = "k=" + std::to_string(probe.basis_index);
      return res;
    }
    case ProbeKind::product:
      return discrim_fixed_entangled(ch1, ch2, product_probe(basis_state(d, 0), basis_state(d, 0)), p1,
                                     ProbeClass::product);
    case ProbeKind::maxent:
      return discrim_fixed_entangled(ch1, ch2, max_entangled(d), p1, ProbeClass::max_entangled);
    case ProbeKind::nonmax: {
      require_qubit();
      const double g = family_weight(probe, nullptr, "g");
      auto res = discrim_fixed_entangled(ch1, ch2, nonmax_qubit(g, 0.0), p1, ProbeClass::nonmax);
      res.probe_params = named("g", g);
      return res;
    }
    case ProbeKind::schmidt: {
      require_qubit();
      const double p = family_weight(probe, nullptr, "p");
      auto res = discrim_fixed_entangled(ch1, ch2, schmidt_pair(p), p1, ProbeClass::nonmax);
      res.probe_params = named("p", p);
      return res;
    }
    case ProbeKind::zeta: {
      if (d != 3) throw DomainError("probe class 'zeta' needs qutrit channels");
      return discrim_fixed_entangled(ch1, ch2, zeta_probe(probe.c1, probe.c2), p1, ProbeClass::nonmax);
    }
    case ProbeKind::optimize_single:
      return optimize_single(ch1, ch2, opts, p1);
    case ProbeKind::optimize_ent:
      return optimize_entangled(ch1, ch2, opts, p1);
    default:
      throw DomainError("closed-form probe class '" + probe.text + "' needs a named channel family");
  }
}

DiscriminationResult evaluate_family(const FamilySpec& spec, const ProbeSpec& probe, double p1,
                                     const OptimizerOptions& opts) {
  switch (probe.kind) {
    case ProbeKind::single_closed:
    case ProbeKind::maxent_closed:
    case ProbeKind::nonmax_closed:
    case ProbeKind::schmidt_closed:
      if (p1 != 0.5) throw DomainError("closed forms assume equal priors");
      return evaluate_closed(spec, probe);
    default:
      break;
  }
  ProbeSpec resolved = probe;
  if (probe.kind == ProbeKind::nonmax) resolved.weight = family_weight(probe, &spec, "g");
  if (probe.kind == ProbeKind::schmidt) resolved.weight = family_weight(probe, &spec, "p");
  const auto [ch1, ch2] = build_channel_pair(spec);
  return evaluate_channels(ch1, ch2, resolved, p1, opts);
}

std::vector<double> SweepRange::values() const {
  if (!(step > 0.0)) throw DomainError("sweep step for '" + name + "' must be positive");
  if (!(stop >= start)) throw DomainError("sweep range for '" + name + "' is empty");
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count + 1));
  char buf[64];
  for (long i = 0; i <= count; ++i) {
    // snap to 12 significant digits so 0.05 + 3 * 0.1 prints as 0.35
    std::snprintf(buf, sizeof(buf), "%.12g", start + static_cast<double>(i) * step);
    out.push_back(std::strtod(buf, nullptr));
  }
  return out;
}

SweepRange parse_sweep_range(const std::string& text) {
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (eq == std::string::npos || eq == 0 || c1 == std::string::npos || c2 == std::string::npos) {
    throw DomainError("malformed sweep range '" + text + "', expected name=start:stop:step");
  }
  SweepRange r;
  r.name = text.substr(0, eq);
  r.start = parse_number(text.substr(eq + 1, c1 - eq - 1), "sweep range");
  r.stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "sweep range");
  r.step = parse_number(text.substr(c2 + 1), "sweep range");
  return r;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const OptimizerOptions& opts) {
  if (spec.ranges.empty() || spec.ranges.size() > 2) throw DomainError("a sweep takes one or two parameter ranges");
  if (spec.probe_classes.empty()) throw DomainError("a sweep needs at least one probe class");
  std::vector<std::string> classes = spec.probe_classes;
  std::sort(classes.begin(), classes.end());
  std::vector<ProbeSpec> probes;
  for (const auto& c : classes) probes.push_back(parse_probe_class(c));

  const std::vector<double> first = spec.ranges[0].values();
  const std::vector<double> second = spec.ranges.size() == 2 ? spec.ranges[1].values() : std::vector<double>{0.0};

  std::vector<SweepRow> rows;
  for (double a : first) {
    for (double b : second) {
      FamilySpec point = spec.base;
      point.params[spec.ranges[0].name] = a;
      if (spec.ranges.size() == 2) point.params[spec.ranges[1].name] = b;
      for (const auto& probe : probes) {
        const DiscriminationResult res = evaluate_family(point, probe, 0.5, opts);
        SweepRow row;
        row.family = spec.base.family;
        row.param1 = a;
        if (spec.ranges.size() == 2) row.param2 = b;
        row.probe_class = probe.text;
        row.probability = res.probability;
        row.probe_params = res.probe_params;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "family,param1,param2,probe_class,probability,probe_params\n";
  for (const auto& r : rows) {
    out << csv_field(r.family) << ',' << format_double(r.param1) << ','
        << (r.param2 ? format_double(*r.param2) : std::string()) << ',' << csv_field(r.probe_class) << ','
        << format_double(r.probability) << ',' << csv_field(r.probe_params) << '\n';
  }
}

}  // namespace chandisc
