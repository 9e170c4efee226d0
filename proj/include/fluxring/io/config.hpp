#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fluxring/ring.hpp"

namespace fluxring::io {

// invalid configuration input (missing/unknown keys, bad types, bad values)
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

// rejects keys outside `allowed`, naming the offending key and its context
void require_known_keys(const nlohmann::json& obj,
                        std::initializer_list<const char*> allowed,
                        const std::string& context);

const nlohmann::json& require_object(const nlohmann::json& parent, const char* key,
                                     const std::string& context);
double require_number(const nlohmann::json& obj, const char* key, const std::string& context);
double number_or(const nlohmann::json& obj, const char* key, double fallback,
                 const std::string& context);
std::string string_or(const nlohmann::json& obj, const char* key, const std::string& fallback,
                      const std::string& context);

// presets with fields matching the type definitions (SI units); n_s0 defaults
// to the value implied by lambda_L0, q_pair/m_pair default to a Cooper pair
ring::MaterialSpec material_from_json(const nlohmann::json&);

// L_geom defaults to the circular-loop estimate, N_s to n_s0 * s * 2 pi r
ring::RingSpec ring_from_json(const nlohmann::json&, const ring::MaterialSpec&);

}  // namespace fluxring::io
