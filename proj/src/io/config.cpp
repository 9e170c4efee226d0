#include "fluxring/io/config.hpp"

#include <fstream>

namespace fluxring::io {

using nlohmann::json;

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    return j;
}

void require_known_keys(const json& obj, std::initializer_list<const char*> allowed,
                        const std::string& context)
{
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) {
                known = true;
                break;
            }
        if (!known)
            throw ConfigError("unknown key \"" + key + "\" in " + context);
    }
}

const json& require_object(const json& parent, const char* key, const std::string& context)
{
    if (!parent.contains(key))
        throw ConfigError("missing key \"" + std::string(key) + "\" in " + context);
    const json& v = parent.at(key);
    if (!v.is_object())
        throw ConfigError("key \"" + std::string(key) + "\" in " + context +
                          " must be an object");
    return v;
}

double require_number(const json& obj, const char* key, const std::string& context)
{
    if (!obj.contains(key))
        throw ConfigError("missing key \"" + std::string(key) + "\" in " + context);
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("key \"" + std::string(key) + "\" in " + context +
                          " must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& context)
{
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("key \"" + std::string(key) + "\" in " + context +
                          " must be a number");
    return v.get<double>();
}

std::string string_or(const json& obj, const char* key, const std::string& fallback,
                      const std::string& context)
{
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string())
        throw ConfigError("key \"" + std::string(key) + "\" in " + context +
                          " must be a string");
    return v.get<std::string>();
}

ring::MaterialSpec material_from_json(const json& j)
{
    require_known_keys(j, {"T_c", "lambda_L0", "n_s0", "q_pair", "m_pair"}, "material");
    ring::MaterialSpec m;
    m.T_c = require_number(j, "T_c", "material");
    m.lambda_L0 = require_number(j, "lambda_L0", "material");
    m.q_pair = number_or(j, "q_pair", 2.0 * codata.e_charge, "material");
    m.m_pair = number_or(j, "m_pair", 2.0 * codata.m_electron, "material");
    m.n_s0 = j.contains("n_s0")
                 ? require_number(j, "n_s0", "material")
                 : ring::pair_density_from_lambda(m.lambda_L0, m.q_pair, m.m_pair);
    ring::validate(m);
    return m;
}

ring::RingSpec ring_from_json(const json& j, const ring::MaterialSpec& mat)
{
    require_known_keys(j, {"radius", "cross_section", "wall_width", "L_geom", "N_s"}, "ring");
    ring::RingSpec r;
    r.radius = require_number(j, "radius", "ring");
    r.cross_section = require_number(j, "cross_section", "ring");
    r.wall_width = require_number(j, "wall_width", "ring");
    r.L_geom = j.contains("L_geom")
                   ? require_number(j, "L_geom", "ring")
                   : ring::loop_inductance_estimate(r.radius, r.cross_section);
    r.N_s = j.contains("N_s") ? require_number(j, "N_s", "ring")
                              : ring::pair_count(r.radius, r.cross_section, mat.n_s0);
    ring::validate(r);
    return r;
}

}  // namespace fluxring::io
