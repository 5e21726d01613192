#include "run_config.hpp"

#include "jastrow1d/errors.hpp"
#include "jastrow1d/jastrow.hpp"
#include "jastrow1d/oscillator.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace jastrow1d::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require_int(const char *flag, int value, int lo, int hi) {
    if (value < lo || value > hi) {
        throw UsageError(std::string("--") + flag + " = " + std::to_string(value) + " is out of range [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

template <class T> T take(const nlohmann::json &value, const std::string &key) {
    try {
        if constexpr (std::is_same_v<T, int>) {
            if (!value.is_number_integer()) {
                throw UsageError("");
            }
        } else if constexpr (std::is_same_v<T, double>) {
            if (!value.is_number()) {
                throw UsageError("");
            }
        } else if (!value.is_string()) {
            throw UsageError("");
        }
        return value.get<T>();
    } catch (const std::exception &) {
        throw UsageError("config key '" + key + "' has the wrong type");
    }
}

} // namespace

void validate(const RunConfig &c) {
    if (!std::isfinite(c.interaction.strength)) {
        throw UsageError("--g must be a finite number");
    }
    if (c.interaction.uses_range() && !(c.interaction.range > 0.0 && std::isfinite(c.interaction.range))) {
        throw UsageError("--range-b must be a positive finite number for " +
                         std::string(to_string(c.interaction.kind)));
    }
    require_int("particles", c.particles, kMinParticles, kMaxParticles);
    require_int("orbitals", c.orbitals, 2, kMaxRelativeBasis);
    require_int("quad-order", c.quad_order, 20, kMaxHermiteOrder);
    require_int("alpha-steps", c.alpha_steps, 3, 10001);
    require_int("eigenvalues", c.eigenvalues, 2, 64);

    const double lo = minimum_scan_alpha(c.particles);
    if (!(c.alpha_min >= lo) || !std::isfinite(c.alpha_min)) {
        throw UsageError("--alpha-min = " + fmt(c.alpha_min) + " is below the normalizability bound; need >= " +
                         fmt(lo) + " for " + std::to_string(c.particles) + " particles");
    }
    if (!(c.alpha_max > c.alpha_min) || !std::isfinite(c.alpha_max)) {
        throw UsageError("--alpha-max = " + fmt(c.alpha_max) + " must be finite and greater than --alpha-min = " +
                         fmt(c.alpha_min));
    }
}

nlohmann::json to_json(const RunConfig &c) {
    return {
        {"interaction", std::string(to_string(c.interaction.kind))},
        {"g", c.interaction.strength},
        {"range-b", c.interaction.range},
        {"particles", c.particles},
        {"statistics", std::string(to_string(c.statistics))},
        {"orbitals", c.orbitals},
        {"quad-order", c.quad_order},
        {"alpha-min", c.alpha_min},
        {"alpha-max", c.alpha_max},
        {"alpha-steps", c.alpha_steps},
        {"eigenvalues", c.eigenvalues},
        {"output", c.output},
    };
}

RunConfig apply_json(const nlohmann::json &doc, RunConfig c) {
    if (!doc.is_object()) {
        throw UsageError("config file must hold a flat JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key == "interaction") {
            try {
                c.interaction.kind = parse_interaction_kind(take<std::string>(value, key));
            } catch (const InvalidArgument &e) {
                throw UsageError(std::string("config key 'interaction': ") + e.what());
            }
        } else if (key == "g") {
            c.interaction.strength = take<double>(value, key);
        } else if (key == "range-b") {
            c.interaction.range = take<double>(value, key);
        } else if (key == "particles") {
            c.particles = take<int>(value, key);
        } else if (key == "statistics") {
            try {
                c.statistics = parse_statistics(take<std::string>(value, key));
            } catch (const InvalidArgument &e) {
                throw UsageError(std::string("config key 'statistics': ") + e.what());
            }
        } else if (key == "orbitals") {
            c.orbitals = take<int>(value, key);
        } else if (key == "quad-order") {
            c.quad_order = take<int>(value, key);
        } else if (key == "alpha-min") {
            c.alpha_min = take<double>(value, key);
        } else if (key == "alpha-max") {
            c.alpha_max = take<double>(value, key);
        } else if (key == "alpha-steps") {
            c.alpha_steps = take<int>(value, key);
        } else if (key == "eigenvalues") {
            c.eigenvalues = take<int>(value, key);
        } else if (key == "output") {
            c.output = take<std::string>(value, key);
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
    return c;
}

RunConfig load_config_file(const std::string &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("--config: cannot open '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError("--config: '" + path + "' is not valid JSON: " + e.what());
    }
    return apply_json(doc, std::move(base));
}

} // namespace jastrow1d::cli
