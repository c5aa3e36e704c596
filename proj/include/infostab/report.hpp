#pragma once

#include <string>

#include "json.hpp"

#include "infostab/entropy.hpp"
#include "infostab/oracle.hpp"
#include "infostab/stability.hpp"

namespace infostab {

nlohmann::json to_json(const CanonicalSolution& candidate);
nlohmann::json to_json(const stability::StabilityCertificate& cert);
nlohmann::json to_json(const equation::ResidualReport& report);
nlohmann::json to_json(const entropy::SystemReport& report);
nlohmann::json to_json(const oracle::FitResult& fit);

void write_json(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json(const std::string& path);

}  // namespace infostab
