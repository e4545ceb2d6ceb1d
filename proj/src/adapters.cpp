// Copyright 2026 The uniperturb Authors.
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

// Subprocess and HTTP adapters for external black-box models.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <thread>

#include <json.hpp>

#include "uniperturb/errors.hpp"
#include "uniperturb/targets.hpp"

#define CPPHTTPLIB_NO_EXCEPTIONS 0
#include <httplib.h>

namespace uniperturb {

namespace {

using json = nlohmann::json;

// ensure_ascii keeps every control and non-ASCII codepoint \uXXXX-escaped,
// so one request or response is always exactly one ASCII line.
std::string dump_ascii(const json& j) {
  return j.dump(-1, ' ', /*ensure_ascii=*/true);
}

}  // namespace

std::string encode_request(std::uint64_t id, TextView text) {
  json req;
  req["id"] = id;
  req["text"] = utf8_encode(text);
  return dump_ascii(req);
}

ModelResponse decode_response(const std::string& line,
                              std::uint64_t expected_id, double measured_ms) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ProtocolError(std::string("malformed response line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("id") || !j["id"].is_number_unsigned())
    throw ProtocolError("response is missing a numeric id");
  if (j["id"].get<std::uint64_t>() != expected_id)
    throw ProtocolError("response id " + j["id"].dump() +
                        " does not match request id " +
                        std::to_string(expected_id));
  if (!j.contains("output") || !j["output"].is_string())
    throw ProtocolError("response is missing the output field");

  ModelResponse resp;
  resp.output = utf8_decode(j["output"].get<std::string>());
  if (j.contains("label") && !j["label"].is_null()) {
    if (!j["label"].is_string())
      throw ProtocolError("label must be a string or null");
    resp.label = j["label"].get<std::string>();
  }
  if (j.contains("scores") && !j["scores"].is_null()) {
    if (!j["scores"].is_object())
      throw ProtocolError("scores must be an object or null");
    resp.scores.emplace();
    for (const auto& [label, value] : j["scores"].items()) {
      if (!value.is_number())
        throw ProtocolError("score for '" + label + "' is not a number");
      (*resp.scores)[label] = value.get<double>();
    }
  }
  if (j.contains("cost") && !j["cost"].is_null()) {
    if (!j["cost"].is_number())
      throw ProtocolError("cost must be a number or null");
    resp.cost = j["cost"].get<double>();
    resp.wall_clock_cost = false;
  } else {
    resp.cost = measured_ms;
    resp.wall_clock_cost = true;
  }
  return resp;
}

SubprocessTarget::SubprocessTarget(std::string command, int timeout_ms)
    : command_(std::move(command)), timeout_ms_(timeout_ms) {}

void SubprocessTarget::spawn() {
  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0)
    throw EvaluationError("cannot create worker pipes");
  const int pid = fork();
  if (pid < 0) throw EvaluationError("cannot fork worker");
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(),
          static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);
  pid_ = pid;
  to_child_ = to_child[1];
  from_child_ = from_child[0];
}

SubprocessTarget::~SubprocessTarget() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    kill(pid_, SIGTERM);
    int status = 0;
    waitpid(pid_, &status, 0);
  }
}

ModelResponse SubprocessTarget::evaluate(TextView input) {
  if (pid_ < 0) spawn();
  const std::uint64_t id = next_id_++;
  const std::string line = encode_request(id, input) + "\n";

  const auto start = std::chrono::steady_clock::now();
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n =
        write(to_child_, line.data() + written, line.size() - written);
    if (n <= 0)
      throw EvaluationError("worker closed its input (command: " + command_ +
                            ")");
    written += static_cast<std::size_t>(n);
  }

  std::string response;
  while (true) {
    const std::size_t nl = read_buffer_.find('\n');
    if (nl != std::string::npos) {
      response = read_buffer_.substr(0, nl);
      read_buffer_.erase(0, nl + 1);
      break;
    }
    pollfd pfd{from_child_, POLLIN, 0};
    const int r = poll(&pfd, 1, timeout_ms_);
    if (r == 0) throw EvaluationError("worker response timed out");
    if (r < 0) throw EvaluationError("poll on worker pipe failed");
    char buf[4096];
    const ssize_t n = read(from_child_, buf, sizeof buf);
    if (n <= 0)
      throw EvaluationError("worker exited before responding (command: " +
                            command_ + ")");
    read_buffer_.append(buf, static_cast<std::size_t>(n));
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return decode_response(response, id, elapsed);
}

struct HttpTarget::Impl {
  explicit Impl(const std::string& host_port) : client(host_port) {}
  httplib::Client client;
  std::uint64_t next_id = 0;
};

HttpTarget::HttpTarget(const std::string& endpoint, HttpTargetOptions options)
    : options_(options) {
  const std::string prefix = "http://";
  if (endpoint.rfind(prefix, 0) != 0)
    throw ConfigError("http target endpoint must start with http://");
  const std::string rest = endpoint.substr(prefix.size());
  const std::size_t slash = rest.find('/');
  const std::string host_port =
      prefix + (slash == std::string::npos ? rest : rest.substr(0, slash));
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  impl_ = std::make_unique<Impl>(host_port);
  impl_->client.set_connection_timeout(options_.timeout_s, 0);
  impl_->client.set_read_timeout(options_.timeout_s, 0);
}

HttpTarget::~HttpTarget() = default;

ModelResponse HttpTarget::evaluate(TextView input) {
  const std::uint64_t id = impl_->next_id++;
  const std::string body = encode_request(id, input);

  int backoff = options_.backoff_ms;
  const auto start = std::chrono::steady_clock::now();
  for (int attempt = 0;; ++attempt) {
    auto res = impl_->client.Post(path_, body, "application/json");
    const bool transient =
        !res || (res->status >= 500 && res->status <= 599);
    if (res && res->status >= 200 && res->status <= 299) {
      const auto elapsed = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      return decode_response(res->body, id, elapsed);
    }
    if (!transient) {
      throw EvaluationError("http target returned status " +
                            std::to_string(res->status));
    }
    if (attempt >= options_.max_retries) {
      throw EvaluationError(
          res ? "http target still failing after retries, last status " +
                    std::to_string(res->status)
              : "cannot reach http target after retries");
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    backoff *= 2;
  }
}

}  // namespace uniperturb
