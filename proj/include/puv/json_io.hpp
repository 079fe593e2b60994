#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace puv {

struct ProbOptions {
  std::string method = "bezout";  // barett | bezout | schur | mc
  std::string backend = "exact";  // exact | float
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 20240915;
};

// Each runner takes the parsed request payload and returns the response
// document.  Malformed payloads raise std::invalid_argument (CLI exit 1);
// violated mathematical preconditions raise DomainError (CLI exit 2).
nlohmann::json run_prob(const nlohmann::json& payload, const ProbOptions& opts);
nlohmann::json run_identity(const nlohmann::json& payload);
nlohmann::json run_rsk(const nlohmann::json& payload);
nlohmann::json run_schur(const nlohmann::json& payload);
nlohmann::json run_count(const nlohmann::json& payload);
nlohmann::json run_enumerate(const nlohmann::json& payload);

}  // namespace puv
