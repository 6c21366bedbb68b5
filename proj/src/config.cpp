#include "emo/config.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "emo/errors.hpp"
#include "emo/presets.hpp"

namespace emo {

namespace {

constexpr std::array kKnownKeys = {
    "algorithm",      "problem",         "zdt.d",
    "dtlz2.objectives", "dtlz2.k",       "knapsack.instance",
    "population",     "seed",            "max_generations",
    "max_evaluations", "max_seconds",    "relation",
    "fitness",        "diversity",       "sharing.sigma",
    "sharing.alpha",  "knn.k",           "selection",
    "replacement",    "archive",         "ibea.kappa",
    "ibea.indicator", "ibea.hvd_ref",    "achievement.weights",
    "achievement.reference", "achievement.rho", "hv_ref",
    "delta_indicator", "snapshot_every", "snapshot_dir",
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
    throw ConfigError(key + ": " + why);
}

long to_long(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        long x = std::stol(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        bad(key, "not an integer: `" + v + "`");
    }
}

double to_real(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        bad(key, "not a real: `" + v + "`");
    }
}

std::vector<double> to_reals(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(v);
    while (std::getline(ss, item, ','))
        out.push_back(to_real(key, trim(item)));
    if (out.empty())
        bad(key, "expected a comma-separated list of reals");
    return out;
}

// "name" or "name:arg" split
std::pair<std::string, std::string> split_spec(const std::string& v) {
    auto colon = v.find(':');
    if (colon == std::string::npos)
        return {v, ""};
    return {v.substr(0, colon), v.substr(colon + 1)};
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_reals(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + format_real(v[i]);
    return out;
}

DominanceRelation parse_relation(const std::string& v) {
    auto [name, arg] = split_spec(v);
    if (name == "pareto")
        return rel::Pareto{};
    if (name == "weak")
        return rel::Weak{};
    if (name == "strict")
        return rel::Strict{};
    if (name == "epsilon")
        return rel::Epsilon{to_reals("relation", arg)};
    if (name == "g")
        return rel::G{to_reals("relation", arg)};
    bad("relation", "unknown relation `" + v + "`");
}

std::string relation_to_string(const DominanceRelation& r) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, rel::Pareto>)
                return "pareto";
            else if constexpr (std::is_same_v<T, rel::Weak>)
                return "weak";
            else if constexpr (std::is_same_v<T, rel::Strict>)
                return "strict";
            else if constexpr (std::is_same_v<T, rel::Epsilon>)
                return "epsilon:" + format_reals(x.margin);
            else
                return "g:" + format_reals(x.reference);
        },
        r);
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& text, const std::string& origin) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected `key = value`");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key `" + key +
                              "`");
        if (value.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + key +
                              ": empty value");
        if (config.has(key))
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key `" + key +
                              "`");
        config.set(key, value);
    }
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open config: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_experiment_config(buf.str(), path);
}

std::string serialize_experiment_config(const ExperimentConfig& config) {
    std::ostringstream out;
    for (const char* key : kKnownKeys) {
        auto it = config.entries.find(key);
        if (it != config.entries.end())
            out << key << " = " << it->second << "\n";
    }
    return out.str();
}

namespace {

ProblemSpec parse_problem(const ExperimentConfig& c) {
    if (!c.has("problem"))
        bad("problem", "missing");
    const std::string& p = c.entries.at("problem");
    if (p == "zdt1" || p == "zdt2") {
        ZdtSpec spec;
        spec.variant = p == "zdt1" ? 1 : 2;
        if (c.has("zdt.d"))
            spec.d = static_cast<std::size_t>(to_long("zdt.d", c.entries.at("zdt.d")));
        if (spec.d < 2)
            bad("zdt.d", "must be >= 2");
        return spec;
    }
    if (p == "dtlz2") {
        Dtlz2Spec spec;
        if (c.has("dtlz2.objectives"))
            spec.n_obj = static_cast<std::size_t>(
                to_long("dtlz2.objectives", c.entries.at("dtlz2.objectives")));
        if (c.has("dtlz2.k"))
            spec.k = static_cast<std::size_t>(to_long("dtlz2.k", c.entries.at("dtlz2.k")));
        if (spec.n_obj < 2)
            bad("dtlz2.objectives", "must be >= 2");
        return spec;
    }
    if (p == "knapsack") {
        if (!c.has("knapsack.instance"))
            bad("knapsack.instance", "missing (required for problem = knapsack)");
        return KnapsackSpec{c.entries.at("knapsack.instance")};
    }
    bad("problem", "unknown problem `" + p + "`");
}

StoppingCriterion parse_stopping(const ExperimentConfig& c) {
    std::vector<stop::Basic> parts;
    if (c.has("max_generations"))
        parts.push_back(stop::MaxGenerations{to_long("max_generations",
                                                     c.entries.at("max_generations"))});
    if (c.has("max_evaluations"))
        parts.push_back(stop::MaxEvaluations{to_long("max_evaluations",
                                                     c.entries.at("max_evaluations"))});
    if (c.has("max_seconds"))
        parts.push_back(stop::MaxWallTime{to_real("max_seconds", c.entries.at("max_seconds"))});
    if (parts.empty())
        parts.push_back(stop::MaxGenerations{100});
    if (parts.size() == 1)
        return std::visit([](const auto& b) { return StoppingCriterion{b}; }, parts.front());
    return stop::Combined{std::move(parts)};
}

BinaryIndicator parse_ibea_indicator(const ExperimentConfig& c) {
    std::string name = c.has("ibea.indicator") ? c.entries.at("ibea.indicator") : "eps+";
    if (name == "eps+")
        return AdditiveEpsilonIndicator{};
    if (name == "hvd") {
        // reference lives in the per-pass normalized [0,1] space
        ObjectiveVector ref =
            c.has("ibea.hvd_ref") ? to_reals("ibea.hvd_ref", c.entries.at("ibea.hvd_ref"))
                                  : ObjectiveVector{2.0, 2.0};
        return HypervolumeDifferenceIndicator{ref};
    }
    bad("ibea.indicator", "expected eps+ or hvd");
}

fitness::FitnessStrategy parse_fitness(const ExperimentConfig& c, const DominanceRelation& rel) {
    const std::string& f = c.entries.at("fitness");
    if (f == "depth")
        return fitness::DominanceDepth{rel};
    if (f == "rank")
        return fitness::DominanceRank{rel};
    if (f == "count")
        return fitness::DominanceCount{rel};
    if (f == "spea2")
        return fitness::Spea2{rel};
    if (f == "dummy")
        return fitness::Dummy{};
    if (f == "indicator") {
        double kappa = c.has("ibea.kappa") ? to_real("ibea.kappa", c.entries.at("ibea.kappa"))
                                           : 0.05;
        return fitness::IndicatorBased{parse_ibea_indicator(c), kappa};
    }
    if (f == "achievement") {
        if (!c.has("achievement.weights") || !c.has("achievement.reference"))
            bad("fitness", "achievement requires achievement.weights and achievement.reference");
        fitness::AchievementScalarizing a;
        a.weights = to_reals("achievement.weights", c.entries.at("achievement.weights"));
        a.reference = to_reals("achievement.reference", c.entries.at("achievement.reference"));
        a.rho = c.has("achievement.rho")
                    ? to_real("achievement.rho", c.entries.at("achievement.rho"))
                    : 0.01;
        return a;
    }
    bad("fitness", "unknown strategy `" + f + "`");
}

diversity::DiversityStrategy parse_diversity(const ExperimentConfig& c) {
    const std::string& d = c.entries.at("diversity");
    if (d == "crowding")
        return diversity::Crowding{};
    if (d == "dummy")
        return diversity::Dummy{};
    if (d == "sharing") {
        diversity::Sharing s;
        if (c.has("sharing.sigma"))
            s.sigma_share = to_real("sharing.sigma", c.entries.at("sharing.sigma"));
        if (c.has("sharing.alpha"))
            s.alpha = to_real("sharing.alpha", c.entries.at("sharing.alpha"));
        return s;
    }
    if (d == "knn") {
        diversity::NearestNeighbor nn;
        if (c.has("knn.k") && c.entries.at("knn.k") != "auto")
            nn.k = static_cast<std::size_t>(to_long("knn.k", c.entries.at("knn.k")));
        return nn;
    }
    bad("diversity", "unknown strategy `" + d + "`");
}

SelectionScheme parse_selection(const ExperimentConfig& c) {
    auto [name, arg] = split_spec(c.entries.at("selection"));
    if (name == "random")
        return select_scheme::Random{};
    if (name == "tournament")
        return select_scheme::DeterministicTournament{
            arg.empty() ? 2 : static_cast<int>(to_long("selection", arg))};
    if (name == "stochastic")
        return select_scheme::StochasticBinaryTournament{
            arg.empty() ? 1.0 : to_real("selection", arg)};
    if (name == "elitist")
        return select_scheme::Elitist{arg.empty() ? 1.0 : to_real("selection", arg),
                                      select_scheme::DeterministicTournament{2},
                                      select_scheme::DeterministicTournament{2}};
    bad("selection", "unknown scheme `" + c.entries.at("selection") + "`");
}

ReplacementScheme parse_replacement(const ExperimentConfig& c) {
    const std::string& r = c.entries.at("replacement");
    if (r == "generational")
        return replace_scheme::Generational{};
    if (r == "one_shot")
        return replace_scheme::OneShotElitist{};
    if (r == "iterative")
        return replace_scheme::IterativeElitist{};
    bad("replacement", "unknown scheme `" + r + "`");
}

std::optional<ArchiveConfig> parse_archive(const ExperimentConfig& c,
                                           const DominanceRelation& rel) {
    auto [name, arg] = split_spec(c.entries.at("archive"));
    if (name == "none")
        return std::nullopt;
    if (name == "unbounded")
        return ArchiveConfig{archive_kind::Unbounded{}, rel};
    if (name == "bounded")
        return ArchiveConfig{
            archive_kind::Bounded{static_cast<std::size_t>(to_long("archive", arg))}, rel};
    if (name == "fixed")
        return ArchiveConfig{
            archive_kind::FixedSize{static_cast<std::size_t>(to_long("archive", arg))}, rel};
    bad("archive", "unknown kind `" + c.entries.at("archive") + "`");
}

std::string fitness_to_string(const fitness::FitnessStrategy& f) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, fitness::Dummy>)
                return "dummy";
            else if constexpr (std::is_same_v<T, fitness::AchievementScalarizing>)
                return "achievement";
            else if constexpr (std::is_same_v<T, fitness::DominanceRank>)
                return "rank";
            else if constexpr (std::is_same_v<T, fitness::DominanceCount>)
                return "count";
            else if constexpr (std::is_same_v<T, fitness::DominanceDepth>)
                return "depth";
            else if constexpr (std::is_same_v<T, fitness::Spea2>)
                return "spea2";
            else
                return "indicator";
        },
        f);
}

std::string diversity_to_string(const diversity::DiversityStrategy& d) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, diversity::Dummy>)
                return "dummy";
            else if constexpr (std::is_same_v<T, diversity::Crowding>)
                return "crowding";
            else if constexpr (std::is_same_v<T, diversity::Sharing>)
                return "sharing";
            else
                return "knn";
        },
        d);
}

std::string selection_to_string(const SelectionScheme& s) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, select_scheme::Random>)
                return "random";
            else if constexpr (std::is_same_v<T, select_scheme::DeterministicTournament>)
                return "tournament:" + std::to_string(x.m);
            else if constexpr (std::is_same_v<T, select_scheme::StochasticBinaryTournament>)
                return "stochastic:" + format_real(x.p);
            else
                return "elitist:" + format_real(x.p_archive);
        },
        s);
}

std::string replacement_to_string(const ReplacementScheme& r) {
    if (std::holds_alternative<replace_scheme::Generational>(r))
        return "generational";
    if (std::holds_alternative<replace_scheme::OneShotElitist>(r))
        return "one_shot";
    return "iterative";
}

std::string archive_to_string(const std::optional<ArchiveConfig>& a) {
    if (!a)
        return "none";
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, archive_kind::Unbounded>)
                return "unbounded";
            else if constexpr (std::is_same_v<T, archive_kind::Bounded>)
                return "bounded:" + std::to_string(k.capacity);
            else
                return "fixed:" + std::to_string(k.capacity);
        },
        a->kind);
}

} // namespace

BuiltExperiment build_experiment(const ExperimentConfig& config,
                                 const std::string& snapshot_dir_default) {
    if (!config.has("algorithm"))
        bad("algorithm", "missing");
    const std::string& algorithm = config.entries.at("algorithm");

    std::size_t population = 100;
    if (config.has("population")) {
        long n = to_long("population", config.entries.at("population"));
        if (n < 2)
            bad("population", "must be >= 2");
        population = static_cast<std::size_t>(n);
    }
    std::uint64_t seed = 0;
    if (config.has("seed"))
        seed = static_cast<std::uint64_t>(to_long("seed", config.entries.at("seed")));

    ProblemSpec problem = parse_problem(config);
    StoppingCriterion stopping = parse_stopping(config);
    DominanceRelation relation =
        config.has("relation") ? parse_relation(config.entries.at("relation")) : rel::Pareto{};

    RunConfig run;
    if (algorithm == "custom") {
        for (const char* required : {"fitness", "diversity", "selection", "replacement"})
            if (!config.has(required))
                bad(required, "missing (required for algorithm = custom)");
        run.problem = problem;
        run.population_size = population;
        run.stopping = stopping;
    } else {
        PresetParams params;
        if (config.has("ibea.kappa"))
            params.kappa = to_real("ibea.kappa", config.entries.at("ibea.kappa"));
        params.indicator = parse_ibea_indicator(config);
        if (config.has("archive")) {
            auto [name, arg] = split_spec(config.entries.at("archive"));
            if (name == "fixed" && !arg.empty())
                params.archive_capacity = static_cast<std::size_t>(to_long("archive", arg));
        }
        run = build_preset(preset_from_string(algorithm), problem, population, stopping, params);
        if (config.has("relation")) {
            // swap the relation inside dominance-based fitness and the archive
            std::visit(
                [&](auto& f) {
                    if constexpr (requires { f.relation; })
                        f.relation = relation;
                },
                run.fitness_strategy);
            if (run.archive)
                run.archive->relation = relation;
        }
    }
    if (config.has("fitness"))
        run.fitness_strategy = parse_fitness(config, relation);
    if (config.has("diversity"))
        run.diversity_strategy = parse_diversity(config);
    if (config.has("selection"))
        run.selection = parse_selection(config);
    if (config.has("replacement"))
        run.replacement = parse_replacement(config);
    if (config.has("archive"))
        run.archive = parse_archive(config, relation);
    run.seed = seed;

    if (config.has("hv_ref"))
        run.hooks.push_back(hook::IndicatorProgress{to_reals("hv_ref",
                                                             config.entries.at("hv_ref"))});
    if (config.has("delta_indicator")) {
        const std::string& d = config.entries.at("delta_indicator");
        if (d == "eps+")
            run.hooks.push_back(hook::ArchiveDeltaMetric{AdditiveEpsilonIndicator{}});
        else if (d == "hvd") {
            if (!config.has("hv_ref"))
                bad("delta_indicator", "hvd requires hv_ref");
            run.hooks.push_back(hook::ArchiveDeltaMetric{HypervolumeDifferenceIndicator{
                to_reals("hv_ref", config.entries.at("hv_ref"))}});
        } else {
            bad("delta_indicator", "expected eps+ or hvd");
        }
    }
    if (config.has("snapshot_every")) {
        long every = to_long("snapshot_every", config.entries.at("snapshot_every"));
        if (every < 1)
            bad("snapshot_every", "must be >= 1");
        std::string dir = config.has("snapshot_dir") ? config.entries.at("snapshot_dir")
                                                     : snapshot_dir_default;
        run.hooks.push_back(hook::FrontSnapshotWriter{dir, every});
    }

    validate_config(run);

    // Fully-resolved, round-trippable view of what will execute.
    ExperimentConfig resolved = config;
    resolved.set("algorithm", algorithm);
    resolved.set("population", std::to_string(population));
    resolved.set("seed", std::to_string(seed));
    if (!config.has("max_generations") && !config.has("max_evaluations") &&
        !config.has("max_seconds"))
        resolved.set("max_generations", "100");
    resolved.set("fitness", fitness_to_string(run.fitness_strategy));
    resolved.set("diversity", diversity_to_string(run.diversity_strategy));
    resolved.set("selection", selection_to_string(run.selection));
    resolved.set("replacement", replacement_to_string(run.replacement));
    resolved.set("archive", archive_to_string(run.archive));
    resolved.set("relation", relation_to_string(relation));

    return BuiltExperiment{std::move(run), std::move(resolved)};
}

} // namespace emo
