#include <nlohmann/json.hpp>

#ifdef SPECTRUM_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "spectrum/backend.hpp"
#include "spectrum/error.hpp"

namespace spectrum {

namespace {

using nlohmann::json;

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
    if (config_.base_url.empty()) {
      throw ConfigError("http backend: base_url is required");
    }
  }

  std::string complete(const std::string& system_prompt,
                       const std::string& user_prompt, double temperature,
                       std::uint64_t seed) const override {
    json body = {
        {"model", config_.model},
        {"temperature", temperature},
        {"seed", seed},
        {"messages",
         json::array({json{{"role", "system"}, {"content", system_prompt}},
                      json{{"role", "user"}, {"content", user_prompt}}})},
    };

    // one client per call keeps this trivially thread safe
    httplib::Client client(config_.base_url);
    client.set_read_timeout(config_.timeout_seconds, 0);
    client.set_connection_timeout(config_.timeout_seconds, 0);
    httplib::Headers headers;
    if (!config_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + config_.api_key);
    }
    auto res = client.Post(config_.path, headers, body.dump(),
                           "application/json");
    if (!res) {
      throw BackendError("http backend: transport failure talking to " +
                         config_.base_url +
                         " (" + httplib::to_string(res.error()) + ")");
    }
    if (res->status != 200) {
      throw BackendError("http backend: status " +
                         std::to_string(res->status) + ": " + res->body);
    }
    try {
      json reply = json::parse(res->body);
      return reply.at("choices").at(0).at("message").at("content")
          .get<std::string>();
    } catch (const json::exception& e) {
      throw BackendError(std::string("http backend: malformed response: ") +
                         e.what());
    }
  }

 private:
  HttpBackendConfig config_;
};

}  // namespace

std::unique_ptr<Backend> make_http_backend(HttpBackendConfig config) {
  return std::make_unique<HttpBackend>(std::move(config));
}

}  // namespace spectrum
