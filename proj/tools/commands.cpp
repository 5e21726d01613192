#include "commands.hpp"

#include "jastrow1d/ci.hpp"
#include "jastrow1d/errors.hpp"
#include "jastrow1d/jastrow.hpp"
#include "jastrow1d/twobody.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace jastrow1d::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

json optional_json(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

json envelope(const RunConfig &c, const char *command) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"config", to_json(c)}};
}

json interaction_json(const Interaction &inter) {
    return {{"kind", std::string(to_string(inter.kind))}, {"g", inter.strength}, {"b", inter.range}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

void emit(const RunConfig &c, const std::string &text, std::ostream &out) {
    if (c.output.empty()) {
        out << text;
    } else {
        write_file(c.output, text);
    }
}

// scan.csv -> scan.summary.json, next to the CSV.
std::string summary_path(const std::string &csv_path) {
    std::filesystem::path p(csv_path);
    return (p.parent_path() / (p.stem().string() + ".summary.json")).string();
}

JastrowAnsatz prototype(const RunConfig &c) {
    TwoBodySolution pair = solve_relative(c.interaction, c.orbitals, parity_for(c.statistics));
    return JastrowAnsatz(c.particles, c.statistics, c.alpha_max, std::move(pair));
}

std::string scan_csv(const ScanResult &scan) {
    std::string csv = "alpha,energy,log_norm,convergence_delta\n";
    for (const auto &p : scan.points) {
        csv += num(p.alpha) + "," + num(p.estimate.energy) + "," + num(p.estimate.log_norm) + "," +
               num(p.estimate.convergence_delta) + "\n";
    }
    return csv;
}

json scan_summary(const RunConfig &c, const char *command, const ScanResult &scan) {
    json j = envelope(c, command);
    j["alpha_star"] = scan.alpha_star;
    j["energy_star"] = scan.energy_star;
    j["boundary_minimum"] = scan.boundary_minimum;
    j["unimodal"] = scan.unimodal;
    j["warnings"] = scan.warnings;
    j["points"] = scan.points.size();
    return j;
}

void require_ci_config(const RunConfig &c) {
    if (c.orbitals < c.particles || c.orbitals > kMaxCiOrbitals) {
        throw UsageError("--orbitals = " + std::to_string(c.orbitals) + " is out of range [" +
                         std::to_string(c.particles) + ", " + std::to_string(kMaxCiOrbitals) +
                         "] for the CI reference");
    }
    const int min_quanta = c.statistics == Statistics::fermions ? c.particles * (c.particles - 1) / 2 : 0;
    if (c.orbitals - 1 < min_quanta) {
        throw UsageError("--orbitals = " + std::to_string(c.orbitals) + " is too small for " +
                         std::to_string(c.particles) + " fermions; need at least " + std::to_string(min_quanta + 1));
    }
}

struct CiRun {
    std::size_t dimension = 0;
    CISpectrum spectrum;
    std::optional<double> m_delta;
};

CiRun run_ci(const RunConfig &c) {
    CiRun run;
    const FockBasis basis = build_fock_basis(c.particles, c.orbitals, c.statistics, Truncation::total_quanta);
    run.dimension = basis.dimension();
    const Matrix h = build_hamiltonian(basis, two_body_tensor(c.interaction, c.orbitals));
    run.spectrum = solve_spectrum(h, std::min<int>(c.eigenvalues, static_cast<int>(run.dimension)));

    const int smaller = c.orbitals - 3;
    const int min_quanta = c.statistics == Statistics::fermions ? c.particles * (c.particles - 1) / 2 : 0;
    if (smaller >= c.particles && smaller - 1 >= min_quanta) {
        const CISpectrum coarse = ci_ground_spectrum(c.interaction, c.particles, smaller, c.statistics, 1);
        run.m_delta = run.spectrum.energies.front() - coarse.energies.front();
    }
    return run;
}

std::string compare_table(const std::optional<ScanResult> &scan, const CompareReport &r) {
    std::ostringstream t;
    char line[160];
    std::snprintf(line, sizeof line, "%10s  %18s  %18s\n", "alpha", "E_trial", "E_ci");
    t << line;
    if (scan) {
        for (const auto &p : scan->points) {
            if (r.e_ci) {
                std::snprintf(line, sizeof line, "%10.5f  %18.10f  %18.10f\n", p.alpha, p.estimate.energy, *r.e_ci);
            } else {
                std::snprintf(line, sizeof line, "%10.5f  %18.10f  %18s\n", p.alpha, p.estimate.energy, "n/a");
            }
            t << line;
        }
    }
    const auto show = [&](const char *label, const std::optional<double> &v) {
        if (v) {
            std::snprintf(line, sizeof line, "%-16s %.10g\n", label, *v);
        } else {
            std::snprintf(line, sizeof line, "%-16s n/a\n", label);
        }
        t << line;
    };
    show("alpha_star", r.alpha_star);
    show("E_trial_min", r.e_trial_min);
    show("E_ci", r.e_ci);
    show("gap", r.gap);
    show("delta", r.delta);
    show("delta/gap", r.delta_over_gap);
    show("quadrature_delta", r.quadrature_delta);
    show("ci_m_delta", r.ci_m_delta);
    for (const auto &e : r.errors) {
        t << "error: " << e << "\n";
    }
    return t.str();
}

} // namespace

int cmd_twobody(const RunConfig &c, std::ostream &out) {
    const Parity parity = parity_for(c.statistics);
    const TwoBodySolution sol = solve_relative(c.interaction, c.orbitals, parity);
    std::optional<double> delta;
    if (c.orbitals - 3 >= 2) {
        delta = sol.energy - solve_relative(c.interaction, c.orbitals - 3, parity).energy;
    }
    json j = envelope(c, "twobody");
    j["interaction"] = interaction_json(c.interaction);
    j["parity"] = std::string(to_string(sol.parity));
    j["energy"] = sol.energy;
    j["coefficients"] = sol.coeffs;
    j["basis_size"] = sol.basis_size;
    j["residual"] = sol.residual;
    j["basis_convergence_delta"] = optional_json(delta);
    emit(c, dump(j), out);
    return kExitOk;
}

int cmd_scan(const RunConfig &c, std::ostream &out) {
    const ScanResult scan = scan_alpha(prototype(c), c.alpha_min, c.alpha_max, c.alpha_steps, c.quad_order);
    const std::string summary = dump(scan_summary(c, "scan", scan));
    if (c.output.empty()) {
        out << scan_csv(scan) << summary;
    } else {
        write_file(c.output, scan_csv(scan));
        write_file(summary_path(c.output), summary);
    }
    return kExitOk;
}

int cmd_minimize(const RunConfig &c, std::ostream &out) {
    const ScanResult scan = scan_alpha(prototype(c), c.alpha_min, c.alpha_max, c.alpha_steps, c.quad_order);
    emit(c, dump(scan_summary(c, "minimize", scan)), out);
    return kExitOk;
}

int cmd_ci(const RunConfig &c, std::ostream &out) {
    require_ci_config(c);
    const CiRun run = run_ci(c);
    json j = envelope(c, "ci");
    j["energies"] = run.spectrum.energies;
    j["gap"] = run.spectrum.gap;
    j["dimension"] = run.dimension;
    j["M"] = c.orbitals;
    j["N"] = c.particles;
    j["statistics"] = std::string(to_string(c.statistics));
    j["interaction"] = interaction_json(c.interaction);
    j["truncation"] = std::string(to_string(Truncation::total_quanta));
    j["max_residual"] = run.spectrum.max_residual;
    j["m_convergence_delta"] = optional_json(run.m_delta);
    emit(c, dump(j), out);
    return kExitOk;
}

int cmd_compare(const RunConfig &c, std::ostream &out) {
    require_ci_config(c);
    CompareReport r;
    std::optional<ScanResult> scan;
    std::vector<std::string> warnings;
    try {
        const JastrowAnsatz proto = prototype(c);
        scan = scan_alpha(proto, c.alpha_min, c.alpha_max, c.alpha_steps, c.quad_order);
        r.alpha_star = scan->alpha_star;
        r.e_trial_min = scan->energy_star;
        r.quadrature_delta = energy_expectation(proto.with_alpha(scan->alpha_star), c.quad_order).convergence_delta;
        warnings = scan->warnings;
    } catch (const std::exception &e) {
        r.partial = true;
        r.errors.push_back(std::string("scan: ") + e.what());
    }
    try {
        const CiRun run = run_ci(c);
        r.e_ci = run.spectrum.energies.front();
        r.gap = run.spectrum.gap;
        r.ci_m_delta = run.m_delta;
    } catch (const std::exception &e) {
        r.partial = true;
        r.errors.push_back(std::string("ci: ") + e.what());
    }
    if (r.e_trial_min && r.e_ci) {
        r.delta = *r.e_trial_min - *r.e_ci;
        if (*r.delta < -1e-3) {
            warnings.push_back("trial energy lies below the CI reference by more than 1e-3");
        }
        if (r.gap && *r.gap > 0.0) {
            r.delta_over_gap = *r.delta / *r.gap;
        }
    }

    json j = envelope(c, "compare");
    j["E_trial_min"] = optional_json(r.e_trial_min);
    j["alpha_star"] = optional_json(r.alpha_star);
    j["E_ci"] = optional_json(r.e_ci);
    j["gap"] = optional_json(r.gap);
    j["delta"] = optional_json(r.delta);
    j["delta_over_gap"] = optional_json(r.delta_over_gap);
    j["quadrature_delta"] = optional_json(r.quadrature_delta);
    j["ci_m_delta"] = optional_json(r.ci_m_delta);
    j["partial"] = r.partial;
    j["errors"] = r.errors;
    j["warnings"] = warnings;
    json curve = json::array();
    if (scan) {
        for (const auto &p : scan->points) {
            curve.push_back({{"alpha", p.alpha}, {"energy", p.estimate.energy}});
        }
    }
    j["curve"] = curve;

    out << compare_table(scan, r);
    emit(c, dump(j), out);
    return r.partial ? kExitFailure : kExitOk;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Jastrow trial wavefunctions for few particles in a 1D harmonic trap"};
    app.require_subcommand(1);

    struct Raw {
        std::string interaction, statistics, config, output;
        double g = 0, b = 0, alpha_min = 0, alpha_max = 0;
        int particles = 0, orbitals = 0, quad_order = 0, alpha_steps = 0, eigenvalues = 0;
        bool emit_config = false;
    } raw;

    const auto add_flags = [&](CLI::App *sub) {
        sub->add_option("--interaction", raw.interaction,
                                              "none, contact, soft_coulomb, quasi1d_coulomb or gaussian");
        sub->add_option("--g", raw.g, "interaction strength");
        sub->add_option("--range-b", raw.b, "interaction range b");
        sub->add_option("--particles", raw.particles, "particle count N (2-4)");
        sub->add_option("--statistics", raw.statistics, "bosons or fermions");
        sub->add_option("--orbitals", raw.orbitals, "oscillator basis size M");
        sub->add_option("--quad-order", raw.quad_order, "Gauss-Hermite order per dimension");
        sub->add_option("--alpha-min", raw.alpha_min, "lower end of the alpha scan");
        sub->add_option("--alpha-max", raw.alpha_max, "upper end of the alpha scan");
        sub->add_option("--alpha-steps", raw.alpha_steps, "number of alpha grid points");
        sub->add_option("--eigenvalues", raw.eigenvalues, "number of CI eigenvalues");
        sub->add_option("--config", raw.config, "flat JSON config file keyed by flag names");
        sub->add_option("--output", raw.output, "output path (stdout when omitted)");
        sub->add_flag("--emit-config", raw.emit_config, "print the resolved config as JSON and exit");
    };
    add_flags(app.add_subcommand("twobody", "relative two-body ground state"));
    add_flags(app.add_subcommand("scan", "energy on an alpha grid (CSV) plus the refined minimum"));
    add_flags(app.add_subcommand("minimize", "refined alpha minimum only"));
    add_flags(app.add_subcommand("ci", "configuration-interaction spectrum"));
    add_flags(app.add_subcommand("compare", "alpha scan against the CI reference"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) {
            reversed.pop_back();
        }
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const CLI::App *sub = app.get_subcommands().front();
    const auto given = [sub](const char *name) { return sub->count(std::string("--") + name) > 0; };
    RunConfig config;
    try {
        if (given("config")) {
            config = load_config_file(raw.config, config);
        }
        if (given("interaction")) {
            try {
                config.interaction.kind = parse_interaction_kind(raw.interaction);
            } catch (const InvalidArgument &e) {
                throw UsageError(std::string("--interaction: ") + e.what());
            }
        }
        if (given("statistics")) {
            try {
                config.statistics = parse_statistics(raw.statistics);
            } catch (const InvalidArgument &e) {
                throw UsageError(std::string("--statistics: ") + e.what());
            }
        }
        if (given("g")) config.interaction.strength = raw.g;
        if (given("range-b")) config.interaction.range = raw.b;
        if (given("particles")) config.particles = raw.particles;
        if (given("orbitals")) config.orbitals = raw.orbitals;
        if (given("quad-order")) config.quad_order = raw.quad_order;
        if (given("alpha-min")) config.alpha_min = raw.alpha_min;
        if (given("alpha-max")) config.alpha_max = raw.alpha_max;
        if (given("alpha-steps")) config.alpha_steps = raw.alpha_steps;
        if (given("eigenvalues")) config.eigenvalues = raw.eigenvalues;
        if (given("output")) config.output = raw.output;
        validate(config);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (raw.emit_config) {
        out << dump(to_json(config));
        return kExitOk;
    }

    const std::string command = sub->get_name();
    try {
        if (command == "twobody") return cmd_twobody(config, out);
        if (command == "scan") return cmd_scan(config, out);
        if (command == "minimize") return cmd_minimize(config, out);
        if (command == "ci") return cmd_ci(config, out);
        return cmd_compare(config, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace jastrow1d::cli
