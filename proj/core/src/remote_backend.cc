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

#include "ctxdenoise/remote_backend.h"

#include <semaphore>
#include <thread>

#include "ctxdenoise/errors.h"
#include "httplib.h"
#include "json.hpp"

namespace ctxdenoise {
namespace {

using nlohmann::json;

struct HttpReply {
  int status = 0;  // 0 when no response was received
  std::string body;
  std::string transport_error;
};

bool Transient(const HttpReply& reply) {
  return reply.status == 0 || reply.status == 429 || reply.status >= 500;
}

}  // namespace

struct RemoteBackend::InFlight {
  explicit InFlight(int limit) : slots(limit) {}
  std::counting_semaphore<> slots;
};

namespace {

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& slots) : slots_(slots) {
    slots_.acquire();
  }
  ~SlotGuard() { slots_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<>& slots_;
};

}  // namespace

namespace {

// Runs `call` until it yields a non-transient reply or attempts run out.
template <typename Call>
HttpReply WithRetries(const RemoteOptions& options, Call&& call) {
  HttpReply reply;
  auto backoff = options.initial_backoff;
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    reply = call();
    if (!Transient(reply)) return reply;
    if (attempt < options.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  return reply;
}

httplib::Client MakeClient(const RemoteOptions& options) {
  httplib::Client client(options.endpoint);
  if (!client.is_valid()) {
    throw ConfigError("invalid backend endpoint '" + options.endpoint + "'",
                      "backend.endpoint");
  }
  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      options.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  return client;
}

HttpReply ToReply(const httplib::Result& result) {
  HttpReply reply;
  if (!result) {
    reply.transport_error = httplib::to_string(result.error());
    return reply;
  }
  reply.status = result->status;
  reply.body = result->body;
  return reply;
}

std::string Describe(const HttpReply& reply) {
  if (reply.status == 0) return reply.transport_error;
  return "HTTP " + std::to_string(reply.status) +
         (reply.body.empty() ? "" : ": " + reply.body.substr(0, 200));
}

}  // namespace

RemoteBackend::RemoteBackend(const Vocab& vocab, RemoteOptions options)
    : vocab_(vocab),
      options_(std::move(options)),
      in_flight_(std::make_unique<InFlight>(std::max(1, options_.max_in_flight))) {
  if (options_.max_attempts < 1) {
    throw ConfigError("max_attempts must be >= 1", "backend.max_attempts");
  }
  const HttpReply reply = WithRetries(options_, [this] {
    auto client = MakeClient(options_);
    return ToReply(client.Get("/v1/info"));
  });
  if (reply.status != 200) {
    throw BackendError("backend unavailable at " + options_.endpoint + ": " +
                       Describe(reply));
  }
  try {
    const json doc = json::parse(reply.body);
    info_.model = doc.value("model", "");
    info_.vocab_hash = doc.at("vocab_hash").get<std::string>();
    info_.max_sequence_length = doc.value("max_sequence_length", std::size_t{0});
  } catch (const json::exception& e) {
    throw BackendError("backend at " + options_.endpoint +
                       " sent malformed /v1/info: " + e.what());
  }
  if (info_.vocab_hash != vocab_.hash()) {
    throw ConfigError("vocabulary hash mismatch with backend at " +
                      options_.endpoint + ": local " + vocab_.hash() +
                      ", service " + info_.vocab_hash);
  }
}

RemoteBackend::~RemoteBackend() = default;

MaskPredictions RemoteBackend::Score(const ScoreRequest& request) const {
  ValidateRequest(request, vocab_);

  json body;
  body["pieces"] = json::array();
  for (PieceId id : request.pieces) body["pieces"].push_back(vocab_.Piece(id));
  body["mask_positions"] = request.mask_positions;
  body["top_k"] = request.top_k;
  const std::string payload = body.dump();

  HttpReply reply;
  {
    SlotGuard slot(in_flight_->slots);
    reply = WithRetries(options_, [this, &payload] {
      auto client = MakeClient(options_);
      return ToReply(client.Post("/v1/score", payload, "application/json"));
    });
  }

  if (reply.status == 400 || reply.status == 413) {
    throw ContractError("backend at " + options_.endpoint +
                        " rejected request: " + Describe(reply));
  }
  if (reply.status != 200) {
    throw BackendError("backend unavailable at " + options_.endpoint + ": " +
                       Describe(reply));
  }

  MaskPredictions predictions;
  try {
    const json doc = json::parse(reply.body);
    for (const auto& list : doc.at("predictions")) {
      auto& out = predictions.emplace_back();
      for (const auto& entry : list) {
        const auto piece = entry.at("piece").get<std::string>();
        auto id = vocab_.Find(piece);
        if (!id) {
          throw BackendError("backend at " + options_.endpoint +
                             " predicted piece '" + piece +
                             "' missing from the local vocabulary");
        }
        out.push_back({*id, entry.at("log_prob").get<double>()});
      }
    }
  } catch (const json::exception& e) {
    throw BackendError("backend at " + options_.endpoint +
                       " sent malformed /v1/score reply: " + e.what());
  }
  try {
    ValidatePredictions(request, predictions, vocab_);
  } catch (const ContractError& e) {
    throw BackendError("backend at " + options_.endpoint +
                       " broke the score contract: " + e.what());
  }
  return predictions;
}

}  // namespace ctxdenoise
