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

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chandisc/channels.hpp"
#include "chandisc/discrimination.hpp"

namespace chandisc {

// Input does not follow the channel JSON schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Raw Kraus data as read from JSON, before CPTP validation.
struct KrausData {
  Index dim_in = 0;
  Index dim_out = 0;
  std::vector<ComplexMatrix> kraus;
};

// {"dim_in": n, "dim_out": m, "kraus": [M1, M2, ...]}, each M a row-major
// nested array of [re, im] pairs.
KrausData kraus_from_json(const nlohmann::json& j);
nlohmann::json kraus_to_json(const Channel& ch);

/// Reads two channels from `{"channels": [a, b]}` or a bare array `[a, b]`.
/// Throws IoError, SchemaError, or CptpError.
std::pair<Channel, Channel> load_channel_pair(const std::filesystem::path& path);

/// {"dims": [dA] or [dA, dB], "amplitudes": [[re, im], ...]}; null for no probe.
nlohmann::json probe_to_json(const ProbeValue& probe);
nlohmann::json result_to_json(const DiscriminationResult& result);

}  // namespace chandisc
