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

#include "chandisc/serialization.hpp"

#include <fstream>

namespace chandisc {

using nlohmann::json;

namespace {

std::complex<double> complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemaError("matrix entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Index positive_dim(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
    throw SchemaError(std::string("'") + key + "' must be a positive integer");
  }
  return static_cast<Index>(j[key].get<long long>());
}

json amplitudes_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

}  // namespace

KrausData kraus_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("channel must be a JSON object");
  KrausData data;
  data.dim_in = positive_dim(j, "dim_in");
  data.dim_out = positive_dim(j, "dim_out");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw SchemaError("'kraus' must be a non-empty array of matrices");
  }
  for (const auto& m : j["kraus"]) {
    if (!m.is_array() || static_cast<Index>(m.size()) != data.dim_out) {
      throw SchemaError("each Kraus matrix must have dim_out rows");
    }
    ComplexMatrix k(data.dim_out, data.dim_in);
    for (Index r = 0; r < data.dim_out; ++r) {
      const auto& row = m[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != data.dim_in) {
        throw SchemaError("each Kraus row must have dim_in entries");
      }
      for (Index c = 0; c < data.dim_in; ++c) k(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    data.kraus.push_back(std::move(k));
  }
  return data;
}

json kraus_to_json(const Channel& ch) {
  json kraus = json::array();
  for (const auto& k : ch.kraus()) {
    json m = json::array();
    for (Index r = 0; r < k.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < k.cols(); ++c) row.push_back({k(r, c).real(), k(r, c).imag()});
      m.push_back(std::move(row));
    }
    kraus.push_back(std::move(m));
  }
  return {{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}, {"kraus", std::move(kraus)}};
}

std::pair<Channel, Channel> load_channel_pair(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("channels")) throw SchemaError("expected a 'channels' array");
    list = &doc["channels"];
  }
  if (!list->is_array() || list->size() != 2) throw SchemaError("expected exactly two channels");
  KrausData a = kraus_from_json((*list)[0]);
  KrausData b = kraus_from_json((*list)[1]);
  Channel first(a.dim_in, a.dim_out, std::move(a.kraus));
  Channel second(b.dim_in, b.dim_out, std::move(b.kraus));
  return {std::move(first), std::move(second)};
}

json probe_to_json(const ProbeValue& probe) {
  if (const auto* s = std::get_if<SinglePureProbe>(&probe)) {
    return {{"dims", json::array({s->dim()})}, {"amplitudes", amplitudes_to_json(s->amplitudes())}};
  }
  if (const auto* b = std::get_if<BipartitePureProbe>(&probe)) {
    return {{"dims", json::array({b->dim_a(), b->dim_b()})}, {"amplitudes", amplitudes_to_json(b->amplitudes())}};
  }
  return nullptr;
}

json result_to_json(const DiscriminationResult& result) {
  json j{{"probability", result.probability},
         {"probe_class", std::string(to_string(result.probe_class))},
         {"method", std::string(to_string(result.method))},
         {"probe", probe_to_json(result.probe)},
         {"probe_params", result.probe_params}};
  if (result.optimizer) {
    const auto& m = *result.optimizer;
    j["optimizer"] = {{"restarts", m.restarts},       {"best_restart", m.best_restart},
                      {"iterations", m.iterations},   {"evaluations", m.evaluations},
                      {"final_step", m.final_step},   {"converged", m.converged}};
  } else {
    j["optimizer"] = nullptr;
  }
  return j;
}

}  // namespace chandisc
