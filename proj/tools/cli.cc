// Copyright 2026 The Qentro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "qentro/qentro.h"
#include "report.h"

namespace qentro::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct RunConfig {
    uint64_t seed = 0;
    LogBase base = LogBase::Bits;
    OutputFormat format = OutputFormat::Table;
    std::string out_path;
};

uint64_t parse_seed(const std::string &text) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::Parse, "seed must be an unsigned 64-bit integer, got \"" + text + "\"");
    }
    return value;
}

nlohmann::json read_json_file(const std::string &path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw Error(ErrorCode::Parse, "cannot read input file \"" + path + "\"");
        }
        buf << in.rdbuf();
    }
    return parse_json(buf.str());
}

std::string unit(const RunConfig &cfg) {
    return std::string(base_label(cfg.base));
}

nlohmann::ordered_json optional_json(const std::optional<double> &x) {
    return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
}

std::string degrees_text(double radians) {
    return csv_number(radians * 180 / kPi);
}

// entropy

Report cmd_entropy(const RunConfig &cfg, const std::string &which, const std::string &input) {
    auto j = read_json_file(input);
    Report r;
    std::string u = unit(cfg);
    if (which == "bound-check") {
        auto check = ensemble_bound_check(ensemble_from_json(j), cfg.base);
        r.doc["lhs"] = quantity(check.lhs, u);
        r.doc["rhs"] = quantity(check.rhs, u);
        r.doc["holds"] = check.holds;
        r.columns = {"lhs", "rhs", "holds", "base"};
        r.rows.push_back({csv_number(check.lhs), csv_number(check.rhs), check.holds ? "true" : "false", u});
        return r;
    }
    double value = 0;
    if (which == "shannon") {
        value = shannon(ProbabilityVector(probabilities_from_json(j)), cfg.base).value;
    } else if (which == "von-neumann") {
        value = von_neumann(DensityMatrix(matrix_from_json(j)), cfg.base).value;
    } else if (which == "informational") {
        value = informational(DensityMatrix(matrix_from_json(j)), cfg.base).value;
    } else {
        value = pure_entropy(pure_state_from_json(j), cfg.base).value;
    }
    r.doc[which] = quantity(value, u);
    r.columns = {"quantity", "value", "base"};
    r.rows.push_back({which, csv_number(value), u});
    return r;
}

// unitary-min

Report cmd_unitary_min(const RunConfig &cfg, const std::string &input, int budget, int starts, std::ostream &err) {
    DensityMatrix rho(matrix_from_json(read_json_file(input)));
    if (budget < 1 || starts < 1) {
        throw Error(ErrorCode::InvalidArgument, "budget and starts must be at least 1");
    }
    auto rep = min_informational_over_unitaries(rho, cfg.base, {.max_sweeps = budget, .starts = starts, .seed = cfg.seed});
    if (rep.residual_vs_von_neumann > 1e-4) {
        err << "warning: residual " << table_number(rep.residual_vs_von_neumann) << " exceeds 1e-4\n";
    }
    std::string u = unit(cfg);
    Report r;
    r.doc["min_informational"] = quantity(rep.min_value, u);
    r.doc["von_neumann"] = quantity(rep.von_neumann, u);
    r.doc["residual"] = quantity(rep.residual_vs_von_neumann, u);
    r.doc["iterations"] = rep.iterations;
    r.doc["budget_exhausted"] = rep.budget_exhausted;
    r.doc["seed"] = cfg.seed;
    r.doc["minimizer"] = to_json(rep.minimizer);
    r.columns = {"min_informational", "von_neumann", "residual", "iterations", "budget_exhausted", "base", "seed"};
    r.rows.push_back({csv_number(rep.min_value), csv_number(rep.von_neumann), csv_number(rep.residual_vs_von_neumann),
                      std::to_string(rep.iterations), rep.budget_exhausted ? "true" : "false", u,
                      std::to_string(cfg.seed)});
    return r;
}

// zeno

struct ZenoArgs {
    std::optional<double> theta_deg;
    std::optional<int> n;
    uint64_t trials = 10000;
    bool sweep = false;
    int max_n = 100;
    bool per_step = false;
};

Report cmd_zeno(const RunConfig &cfg, const ZenoArgs &a) {
    Report r;
    if (a.per_step) {
        auto plan = a.theta_deg ? SteeringPlan::from_theta(*a.theta_deg * kPi / 180)
                                : SteeringPlan::from_steps(a.n.value_or(90));
        auto stats = simulate_steering(plan, a.trials, cfg.seed);
        double c2 = std::pow(std::cos(plan.theta_step), 2);
        r.columns = {"step", "basis_deg", "reached", "forward", "forward_rate", "closed_form_step_prob", "seed"};
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (int k = 0; k < plan.n_steps; k++) {
            uint64_t reached = stats.reached_step[k];
            uint64_t forward = stats.forward_at_step[k];
            std::optional<double> rate;
            if (reached > 0) {
                rate = double(forward) / double(reached);
            }
            double basis = (k + 1) * plan.theta_step;
            r.rows.push_back({std::to_string(k + 1), degrees_text(basis), std::to_string(reached),
                              std::to_string(forward), rate ? csv_number(*rate) : "", csv_number(c2),
                              std::to_string(cfg.seed)});
            steps.push_back({{"step", k + 1},
                             {"basis_deg", basis * 180 / kPi},
                             {"reached", reached},
                             {"forward", forward},
                             {"forward_rate", optional_json(rate)},
                             {"closed_form_step_prob", c2}});
        }
        r.doc["n_steps"] = plan.n_steps;
        r.doc["theta_deg"] = plan.theta_step * 180 / kPi;
        r.doc["trials"] = a.trials;
        r.doc["successes"] = stats.successes;
        r.doc["seed"] = cfg.seed;
        r.doc["steps"] = std::move(steps);
        return r;
    }

    std::vector<SteeringPlan> plans;
    if (a.sweep) {
        if (a.max_n < 1) {
            throw Error(ErrorCode::NonpositiveN, "sweep needs max-n >= 1");
        }
        for (int n = 1; n <= a.max_n; n++) {
            plans.push_back(SteeringPlan::from_steps(n));
        }
    } else if (a.theta_deg) {
        plans.push_back(SteeringPlan::from_theta(*a.theta_deg * kPi / 180));
    } else {
        plans.push_back(SteeringPlan::from_steps(a.n.value_or(90)));
    }
    r.columns = {"n_steps", "theta_deg", "closed_form_prob", "empirical_prob", "trials", "seed"};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &plan : plans) {
        double closed = steering_success_probability(plan);
        std::optional<double> empirical;
        if (a.trials > 0) {
            empirical = simulate_steering(plan, a.trials, cfg.seed).rate();
        }
        double deg = plan.theta_step * 180 / kPi;
        r.rows.push_back({std::to_string(plan.n_steps), csv_number(deg), csv_number(closed),
                          empirical ? csv_number(*empirical) : "", std::to_string(a.trials), std::to_string(cfg.seed)});
        rows.push_back({{"n_steps", plan.n_steps},
                        {"theta_deg", deg},
                        {"closed_form_prob", closed},
                        {"empirical_prob", optional_json(empirical)},
                        {"trials", a.trials},
                        {"seed", cfg.seed}});
    }
    r.doc["steering"] = std::move(rows);
    return r;
}

// mzi

Report cmd_mzi(const RunConfig &cfg, const std::string &arrangement, double prior, uint64_t photons) {
    auto model = arrangement == "rigid"     ? MirrorModel::rigid()
                 : arrangement == "springy" ? MirrorModel::springy()
                                            : MirrorModel::unknown(prior);
    if (!(prior >= 0 && prior <= 1)) {
        throw Error(ErrorCode::InvalidArgument, "prior must lie in [0, 1], got " + csv_number(prior));
    }
    double q = model.prior_springy();
    auto d = outcome_distribution(model);
    double h = arrangement_entropy(model, cfg.base).value;
    double h_bits = arrangement_entropy(model, LogBase::Bits).value;

    Report r;
    r.doc["arrangement"] = arrangement;
    r.doc["prior_springy"] = q;
    r.doc["distribution"] = {{"absorbed", d.p_absorbed}, {"d1", d.p_d1}, {"d2", d.p_d2}};
    r.doc["entropy"] = quantity(h, unit(cfg));
    nlohmann::ordered_json post = nlohmann::ordered_json::object();
    const std::pair<MziOutcome, const char *> outcomes[] = {
        {MziOutcome::Absorbed, "absorbed"}, {MziOutcome::D1, "d1"}, {MziOutcome::D2, "d2"}};
    for (const auto &[o, key] : outcomes) {
        if (d.probability(o) > 0) {
            post[key] = posterior_springy(q, o);
        } else {
            post[key] = nullptr;
        }
    }
    r.doc["posterior_springy"] = std::move(post);

    r.columns = {"arrangement", "prior", "p_absorbed", "p_d1",     "p_d2",
                 "entropy_bits", "seed", "count_absorbed", "count_d1", "count_d2"};
    std::vector<std::string> row{arrangement,       csv_number(q),           csv_number(d.p_absorbed),
                                 csv_number(d.p_d1), csv_number(d.p_d2),      csv_number(h_bits),
                                 std::to_string(cfg.seed)};
    if (photons > 0) {
        auto c = simulate_photons(model, photons, cfg.seed);
        r.doc["photons"] = photons;
        r.doc["seed"] = cfg.seed;
        r.doc["counts"] = {{"absorbed", c.absorbed}, {"d1", c.d1}, {"d2", c.d2}};
        row.insert(row.end(), {std::to_string(c.absorbed), std::to_string(c.d1), std::to_string(c.d2)});
    } else {
        row.insert(row.end(), {"", "", ""});
    }
    r.rows.push_back(std::move(row));
    return r;
}

// protocol

struct EstimateArgs {
    int n = 8;
    uint64_t shots = 1000;
    std::optional<double> theta;
    std::optional<int> theta_index;
    std::string method = "bruteforce";
    uint64_t runs = 1;
    std::optional<double> target;
    uint64_t max_copies = UINT64_MAX;
};

Report cmd_estimate(const RunConfig &cfg, const EstimateArgs &a) {
    using namespace qentro::protocol;
    QuantizationGrid grid(a.n);
    if (a.theta_index && (*a.theta_index < 0 || *a.theta_index >= a.n)) {
        throw Error(ErrorCode::InvalidArgument, "theta-index must lie in [0, n)");
    }
    double target = a.target.value_or(grid.spacing());
    Report r;
    r.columns = {"n", "shots", "theta_true", "theta_hat", "error", "copies_used", "seed"};
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (uint64_t run = 0; run < a.runs; run++) {
        uint64_t seed = cfg.seed + run;
        double theta = a.theta_index ? grid.hypothesis(*a.theta_index)
                       : a.theta     ? *a.theta
                                     : RandomStream(seed).substream(uint64_t(1) << 63).uniform() * kPi / 2;
        HiddenQubitSource src(theta, seed);
        double theta_hat = 0;
        uint64_t copies = 0;
        if (a.method == "adaptive") {
            auto est = estimate_theta_adaptive(src, target, a.shots, a.max_copies);
            theta_hat = est.theta_hat;
            copies = est.copies_used;
        } else {
            auto est = estimate_theta_bruteforce(src, grid, a.shots);
            theta_hat = est.theta_hat;
            copies = est.copies_used;
        }
        double error = std::abs(theta_hat - theta);
        r.rows.push_back({std::to_string(a.n), std::to_string(a.shots), csv_number(theta), csv_number(theta_hat),
                          csv_number(error), std::to_string(copies), std::to_string(seed)});
        runs.push_back({{"n", a.n},
                        {"shots", a.shots},
                        {"theta_true", theta},
                        {"theta_hat", theta_hat},
                        {"error", error},
                        {"copies_used", copies},
                        {"seed", seed}});
    }
    r.doc["method"] = a.method;
    if (a.method == "adaptive") {
        r.doc["target_halfwidth"] = target;
    }
    r.doc["runs"] = std::move(runs);
    return r;
}

struct AttackArgs {
    int n = 10;
    uint64_t trials = 100000;
    std::string strategy = "guess-bits";
    double key_angle_deg = 45;
    bool random_key = false;
};

Report cmd_attack(const RunConfig &cfg, const AttackArgs &a) {
    using namespace qentro::protocol;
    if (a.n < 1) {
        throw Error(ErrorCode::NonpositiveN, "key length must be at least 1");
    }
    RandomStream key_rng = RandomStream(cfg.seed).substream(uint64_t(1) << 63);
    auto key = a.random_key ? SignatureKey::random(a.n, key_rng) : SignatureKey::uniform(a.n, a.key_angle_deg * kPi / 180);
    auto strategy = a.strategy == "guess-angles" ? EveStrategy::guess_angles()
                    : a.strategy == "replay"     ? EveStrategy::replay()
                                                 : EveStrategy::guess_bits();
    auto stats = eve_attack_success(key, strategy, a.trials, cfg.seed);
    double expected = expected_attack_success(key, strategy);
    Report r;
    r.doc["n"] = a.n;
    r.doc["strategy"] = a.strategy;
    r.doc["trials"] = stats.trials;
    r.doc["successes"] = stats.successes;
    r.doc["rate"] = stats.rate();
    r.doc["expected_rate"] = expected;
    r.doc["seed"] = cfg.seed;
    r.columns = {"n", "strategy", "trials", "successes", "rate", "seed"};
    r.rows.push_back({std::to_string(a.n), a.strategy, std::to_string(stats.trials), std::to_string(stats.successes),
                      csv_number(stats.rate()), std::to_string(cfg.seed)});
    return r;
}

// bound

Report cmd_bound(double area) {
    double nats = bekenstein_bound(area, LogBase::Nats).value;
    double bits = bekenstein_bound(area, LogBase::Bits).value;
    Report r;
    r.doc["area"] = area;
    r.doc["nats"] = quantity(nats, "nats");
    r.doc["bits"] = quantity(bits, "bits");
    r.columns = {"area", "nats", "bits"};
    r.rows.push_back({csv_number(area), csv_number(nats), csv_number(bits)});
    return r;
}

int fail(std::ostream &err, ErrorCode code, const std::string &message) {
    std::string line = message;
    for (auto &ch : line) {
        if (ch == '\n' || ch == '\r') {
            ch = ' ';
        }
    }
    err << "error: " << error_code_name(code) << ": " << line << "\n";
    return code == ErrorCode::Parse ? 2 : 3;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entropy, measurement and estimation toolkit for finite-dimensional quantum systems", "qentro"};
    app.set_version_flag("--version", "qentro " QENTRO_VERSION_STRING);
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string seed_text;
    std::string base_text = "bits";
    std::string format_text = "table";
    app.add_option("--seed", seed_text, "Master seed (default 0, or $QENTRO_SEED)");
    app.add_option("--base", base_text, "Logarithm base for entropies")->check(CLI::IsMember({"bits", "nats"}));
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

    std::string entropy_which;
    std::string entropy_input;
    auto *entropy = app.add_subcommand("entropy", "Entropy of a distribution, state, matrix or ensemble");
    entropy->add_option("quantity", entropy_which, "shannon | von-neumann | informational | pure | bound-check")
        ->required()
        ->check(CLI::IsMember({"shannon", "von-neumann", "informational", "pure", "bound-check"}));
    entropy->add_option("input", entropy_input, "JSON input file, or - for stdin")->required();

    std::string umin_input;
    int umin_budget = 100;
    int umin_starts = 8;
    auto *umin = app.add_subcommand("unitary-min", "Minimize the informational entropy over unitary conjugations");
    umin->add_option("input", umin_input, "JSON density matrix file, or - for stdin")->required();
    umin->add_option("--budget", umin_budget, "Maximum sweeps per start")->capture_default_str();
    umin->add_option("--starts", umin_starts, "Random starts")->capture_default_str();

    ZenoArgs zeno_args;
    auto *zeno = app.add_subcommand("zeno", "Measurement-driven steering of |0> to |1>");
    auto *theta_opt = zeno->add_option("--theta-deg", zeno_args.theta_deg, "Step angle in degrees, in (0, 90]");
    auto *n_opt = zeno->add_option("--n", zeno_args.n, "Number of steps (default 90)");
    theta_opt->excludes(n_opt);
    zeno->add_option("--trials", zeno_args.trials, "Monte Carlo trials per plan (0 skips simulation)")
        ->capture_default_str();
    auto *sweep_opt = zeno->add_flag("--sweep", zeno_args.sweep, "Tabulate n = 1..max-n");
    zeno->add_option("--max-n", zeno_args.max_n, "Largest n in a sweep")->capture_default_str();
    auto *per_step_opt = zeno->add_flag("--per-step", zeno_args.per_step, "Per-step collapse statistics");
    sweep_opt->excludes(per_step_opt)->excludes(theta_opt)->excludes(n_opt);

    std::string mzi_arrangement;
    double mzi_prior = 0.5;
    uint64_t mzi_photons = 0;
    auto *mzi = app.add_subcommand("mzi", "Mach-Zehnder arrangement with a rigid, springy or unknown mirror");
    mzi->add_option("--arrangement", mzi_arrangement, "rigid | springy | unknown")
        ->required()
        ->check(CLI::IsMember({"rigid", "springy", "unknown"}));
    mzi->add_option("--prior", mzi_prior, "Prior probability of the springy mirror (unknown only)")
        ->capture_default_str();
    mzi->add_option("--photons", mzi_photons, "Photons to simulate")->capture_default_str();

    auto *protocol = app.add_subcommand("protocol", "Angle estimation game and signature attacks");
    protocol->require_subcommand(1);
    EstimateArgs est_args;
    auto *estimate = protocol->add_subcommand("estimate", "Estimate a hidden polarization angle");
    estimate->add_option("--n", est_args.n, "Quantization levels")->capture_default_str();
    estimate->add_option("--shots", est_args.shots, "Shots per hypothesis (adaptive: per round)")
        ->capture_default_str();
    auto *est_theta = estimate->add_option("--theta", est_args.theta, "Hidden angle in radians");
    auto *est_index = estimate->add_option("--theta-index", est_args.theta_index, "Hide the j-th grid hypothesis");
    est_theta->excludes(est_index);
    estimate->add_option("--method", est_args.method, "bruteforce | adaptive")
        ->check(CLI::IsMember({"bruteforce", "adaptive"}))
        ->capture_default_str();
    estimate->add_option("--runs", est_args.runs, "Independent runs; run r uses seed + r")->capture_default_str();
    estimate->add_option("--target", est_args.target, "Adaptive target halfwidth (default: grid spacing)");
    estimate->add_option("--max-copies", est_args.max_copies, "Adaptive copy budget");

    AttackArgs attack_args;
    auto *attack = protocol->add_subcommand("attack", "Eavesdropper forging a photon signature");
    attack->add_option("--n", attack_args.n, "Key length")->capture_default_str();
    attack->add_option("--trials", attack_args.trials, "Forgery attempts")->capture_default_str();
    attack->add_option("--strategy", attack_args.strategy, "guess-bits | guess-angles | replay")
        ->check(CLI::IsMember({"guess-bits", "guess-angles", "replay"}))
        ->capture_default_str();
    attack->add_option("--key-angle-deg", attack_args.key_angle_deg, "Angle of every key photon")
        ->capture_default_str();
    attack->add_flag("--random-key", attack_args.random_key, "Draw key angles uniformly from the seed");

    double bound_area = 0;
    auto *bound = app.add_subcommand("bound", "Bekenstein entropy bound for a horizon area in Planck units");
    bound->add_option("area", bound_area, "Area A; the bound is A/4 nats")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        return fail(err, ErrorCode::Parse, e.what());
    }

    try {
        if (seed_text.empty()) {
            if (const char *env = std::getenv("QENTRO_SEED"); env != nullptr && *env != '\0') {
                seed_text = env;
            }
        }
        if (!seed_text.empty()) {
            cfg.seed = parse_seed(seed_text);
        }
        cfg.base = base_text == "nats" ? LogBase::Nats : LogBase::Bits;
        cfg.format = format_text == "csv" ? OutputFormat::Csv
                     : format_text == "json" ? OutputFormat::Json
                                             : OutputFormat::Table;

        Report report;
        if (entropy->parsed()) {
            report = cmd_entropy(cfg, entropy_which, entropy_input);
        } else if (umin->parsed()) {
            report = cmd_unitary_min(cfg, umin_input, umin_budget, umin_starts, err);
        } else if (zeno->parsed()) {
            report = cmd_zeno(cfg, zeno_args);
        } else if (mzi->parsed()) {
            report = cmd_mzi(cfg, mzi_arrangement, mzi_prior, mzi_photons);
        } else if (estimate->parsed()) {
            report = cmd_estimate(cfg, est_args);
        } else if (attack->parsed()) {
            report = cmd_attack(cfg, attack_args);
        } else {
            report = cmd_bound(bound_area);
        }

        if (cfg.out_path.empty()) {
            report.render(cfg.format, out);
        } else {
            std::ofstream file(cfg.out_path);
            if (!file) {
                throw Error(ErrorCode::InvalidArgument, "cannot open output file \"" + cfg.out_path + "\"");
            }
            report.render(cfg.format, file);
        }
    } catch (const Error &e) {
        std::string what = e.what();
        std::string prefix = std::string(error_code_name(e.code())) + ": ";
        if (what.rfind(prefix, 0) == 0) {
            what = what.substr(prefix.size());
        }
        return fail(err, e.code(), what);
    }
    return 0;
}

}  // namespace qentro::cli
