#pragma once

#include "jastrow1d/interaction.hpp"
#include "jastrow1d/types.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace jastrow1d::cli {

inline constexpr int kSchemaVersion = 1;

/// Everything a command needs. Defaults describe three bosons in a
/// fifteen-orbital basis with the transverse-averaged Coulomb repulsion.
struct RunConfig {
    Interaction interaction{InteractionKind::quasi1d_coulomb, 0.5, 0.1};
    int particles = 3;
    Statistics statistics = Statistics::bosons;
    int orbitals = 15;
    int quad_order = 64;
    double alpha_min = 0.7;
    double alpha_max = 1.1;
    int alpha_steps = 17;
    int eigenvalues = 4;
    std::string output;

    bool operator==(const RunConfig &) const = default;
};

/// Bad flag or config value; maps to exit code 2.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Throws UsageError naming the offending flag and its valid range.
void validate(const RunConfig &config);

/// Flat object keyed by flag names (without the leading dashes).
nlohmann::json to_json(const RunConfig &config);

/// Applies the keys present in `doc` on top of `base`. Unknown keys and
/// wrongly typed values throw UsageError. The result is not validated.
RunConfig apply_json(const nlohmann::json &doc, RunConfig base);

RunConfig load_config_file(const std::string &path, RunConfig base);

} // namespace jastrow1d::cli
