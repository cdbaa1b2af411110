// Copyright 2026 The ctxdenoise Authors
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

#include "cli/app_config.h"

#include <cstdlib>
#include <fstream>

#include "ctxdenoise/errors.h"
#include "ctxdenoise/table_oracle.h"
#include "json.hpp"

namespace ctxdenoise::cli {
namespace {

using nlohmann::json;

json ReadJson(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " +
                      e.what());
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

// Reads `object[key]` as T, reporting `field` on a type error.
template <typename T>
T Get(const json& object, const char* key, const std::string& field) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("invalid value for " + field + ": " + e.what(), field);
  }
}

void ParseNoise(const json& noise, const std::filesystem::path& base,
                AppConfig& config) {
  if (!noise.is_object()) {
    throw ConfigError("noise must be an object", "noise");
  }
  NoiseSpec& spec = config.noise;
  if (noise.contains("word_prob")) {
    spec.word_prob = Get<double>(noise, "word_prob", "noise.word_prob");
  }
  if (noise.contains("seed")) {
    spec.seed = Get<std::uint64_t>(noise, "seed", "noise.seed");
  }
  if (noise.contains("mode")) {
    const auto mode = Get<std::string>(noise, "mode", "noise.mode");
    if (mode == "artificial") {
      spec.mode = NoiseMode::kArtificial;
    } else if (mode == "natural") {
      spec.mode = NoiseMode::kNatural;
    } else {
      throw ConfigError("noise.mode must be 'artificial' or 'natural'",
                        "noise.mode");
    }
  }
  if (noise.contains("type_probs")) {
    const json& probs = noise.at("type_probs");
    if (probs.is_array()) {
      const auto values =
          Get<std::vector<double>>(noise, "type_probs", "noise.type_probs");
      if (values.size() != 4) {
        throw ConfigError("noise.type_probs needs 4 entries",
                          "noise.type_probs");
      }
      std::copy(values.begin(), values.end(), spec.type_probs.begin());
    } else if (probs.is_object()) {
      spec.type_probs = {0, 0, 0, 0};
      for (const auto& [name, value] : probs.items()) {
        const NoiseType type = ParseNoiseType(name);
        if (type == NoiseType::kNatural || !value.is_number()) {
          throw ConfigError("invalid entry '" + name + "' in noise.type_probs",
                            "noise.type_probs");
        }
        spec.type_probs[static_cast<std::size_t>(type)] = value.get<double>();
      }
    } else {
      throw ConfigError("noise.type_probs must be an array or object",
                        "noise.type_probs");
    }
  }
  if (noise.contains("table")) {
    config.noise_table =
        Resolve(base, Get<std::string>(noise, "table", "noise.table"));
  }
}

}  // namespace

void AppConfig::Validate() const {
  if (backend.oracle.has_value() == backend.remote.has_value()) {
    throw ConfigError(
        "exactly one backend (oracle or endpoint) must be configured",
        "backend");
  }
  if (worker_count < 1) {
    throw ConfigError("workers must be >= 1", "workers");
  }
  denoise.Validate();
  noise.Validate();
}

AppConfig LoadAppConfig(const std::filesystem::path& path) {
  const json doc = ReadJson(path);
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  const std::filesystem::path base = path.parent_path();
  AppConfig config;

  if (doc.contains("vocab")) {
    config.vocab = Resolve(base, Get<std::string>(doc, "vocab", "vocab"));
  }
  if (doc.contains("backend")) {
    const json& backend = doc.at("backend");
    if (!backend.is_object()) {
      throw ConfigError("backend must be an object", "backend");
    }
    if (backend.contains("oracle")) {
      config.backend.oracle =
          Resolve(base, Get<std::string>(backend, "oracle", "backend.oracle"));
    }
    if (backend.contains("endpoint")) {
      RemoteOptions remote;
      remote.endpoint =
          Get<std::string>(backend, "endpoint", "backend.endpoint");
      if (backend.contains("timeout_ms")) {
        remote.timeout = std::chrono::milliseconds(
            Get<long>(backend, "timeout_ms", "backend.timeout_ms"));
      }
      if (backend.contains("max_attempts")) {
        remote.max_attempts =
            Get<int>(backend, "max_attempts", "backend.max_attempts");
      }
      if (backend.contains("max_in_flight")) {
        remote.max_in_flight =
            Get<int>(backend, "max_in_flight", "backend.max_in_flight");
      }
      config.backend.remote = remote;
    }
  }
  if (doc.contains("denoise")) {
    const json& d = doc.at("denoise");
    if (!d.is_object()) throw ConfigError("denoise must be an object", "denoise");
    if (d.contains("max_masks")) {
      config.denoise.max_masks = Get<int>(d, "max_masks", "denoise.max_masks");
    }
    if (d.contains("per_n_top_k")) {
      config.denoise.per_n_top_k =
          Get<std::vector<int>>(d, "per_n_top_k", "denoise.per_n_top_k");
    }
    if (d.contains("candidate_cap")) {
      config.denoise.candidate_cap =
          Get<std::size_t>(d, "candidate_cap", "denoise.candidate_cap");
    }
    if (d.contains("max_sequence_length")) {
      config.denoise.max_sequence_length = Get<std::size_t>(
          d, "max_sequence_length", "denoise.max_sequence_length");
    }
  }
  if (doc.contains("noise")) ParseNoise(doc.at("noise"), base, config);
  if (doc.contains("workers")) {
    const long workers = Get<long>(doc, "workers", "workers");
    if (workers < 1) throw ConfigError("workers must be >= 1", "workers");
    config.worker_count = static_cast<std::size_t>(workers);
  }
  return config;
}

void LoadNoiseSpec(const std::filesystem::path& path, AppConfig& config) {
  const json doc = ReadJson(path);
  const std::filesystem::path base = path.parent_path();
  ParseNoise(doc.contains("noise") ? doc.at("noise") : doc, base, config);
}

void OverrideEndpoint(AppConfig& config, const std::string& endpoint) {
  RemoteOptions remote =
      config.backend.remote.value_or(RemoteOptions{});
  remote.endpoint = endpoint;
  config.backend.remote = remote;
  config.backend.oracle.reset();
}

void OverrideOracle(AppConfig& config, const std::filesystem::path& fixture) {
  config.backend.oracle = fixture;
  config.backend.remote.reset();
}

void ApplyEnvironment(AppConfig& config) {
  if (const char* endpoint = std::getenv(kEndpointEnv);
      endpoint != nullptr && *endpoint != '\0') {
    OverrideEndpoint(config, endpoint);
  }
}

std::unique_ptr<MlmBackend> MakeBackend(const AppConfig& config,
                                        const Vocab& vocab) {
  if (config.backend.oracle) {
    return std::make_unique<TableOracle>(
        TableOracle::Load(*config.backend.oracle, vocab));
  }
  if (config.backend.remote) {
    return std::make_unique<RemoteBackend>(vocab, *config.backend.remote);
  }
  throw ConfigError("no backend configured", "backend");
}

}  // namespace ctxdenoise::cli
