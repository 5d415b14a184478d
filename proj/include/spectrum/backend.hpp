#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace spectrum {

// Chat-completion contract. Implementations must be safe to call from
// multiple threads at once.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string complete(const std::string& system_prompt,
                               const std::string& user_prompt,
                               double temperature,
                               std::uint64_t seed) const = 0;
};

// Offline stand-in for a chat model. The response is a pure function of
// (system_prompt, user_prompt, seed): voting prompts get a parseable label
// drawn from a prompt- and item-dependent distribution, generation prompts
// get deterministic filler text that follows the requested format.
class MockBackend : public Backend {
 public:
  std::string complete(const std::string& system_prompt,
                       const std::string& user_prompt, double temperature,
                       std::uint64_t seed) const override;
};

// Remote chat-completion client (OpenAI-style JSON over HTTP/HTTPS).
struct HttpBackendConfig {
  std::string base_url;          // e.g. "https://api.example.com"
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key;           // usually from SPECTRUM_API_KEY
  int timeout_seconds = 120;
};

std::unique_ptr<Backend> make_http_backend(HttpBackendConfig config);

}  // namespace spectrum
