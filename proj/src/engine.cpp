#include "emo/engine.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "emo/errors.hpp"
#include "emo/front_io.hpp"

namespace emo {

namespace {

void validate_stopping(const StoppingCriterion& crit) {
    auto check_basic = [](const stop::Basic& b) {
        std::visit(
            [](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, stop::MaxGenerations>) {
                    if (c.generations < 0)
                        throw ConfigError("stopping: max generations must be >= 0");
                } else if constexpr (std::is_same_v<T, stop::MaxEvaluations>) {
                    if (c.evaluations <= 0)
                        throw ConfigError("stopping: max evaluations must be positive");
                } else {
                    if (!(c.seconds > 0.0))
                        throw ConfigError("stopping: wall-time budget must be positive");
                }
            },
            b);
    };
    if (const auto* comb = std::get_if<stop::Combined>(&crit)) {
        if (comb->criteria.empty())
            throw ConfigError("stopping: combined criterion must not be empty");
        for (const auto& b : comb->criteria)
            check_basic(b);
    } else {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (!std::is_same_v<T, stop::Combined>)
                    check_basic(stop::Basic{c});
            },
            crit);
    }
}

} // namespace

void validate_config(const RunConfig& config) {
    if (config.population_size < 2)
        throw ConfigError("population: size must be >= 2");
    validate_stopping(config.stopping);
    if (config.pipeline) {
        if (config.pipeline->crossover_rate < 0.0 || config.pipeline->crossover_rate > 1.0 ||
            config.pipeline->mutation_rate < 0.0 || config.pipeline->mutation_rate > 1.0)
            throw ConfigError("variation: rates must lie in [0,1]");
    }
    if (const auto* e = std::get_if<select_scheme::Elitist>(&config.selection)) {
        if (!config.archive)
            throw ConfigError("selection: elitist selection requires an archive");
        if (e->p_archive < 0.0 || e->p_archive > 1.0)
            throw ConfigError("selection: p_archive must lie in [0,1]");
    }
    if (const auto* t = std::get_if<select_scheme::DeterministicTournament>(&config.selection)) {
        if (t->m < 2)
            throw ConfigError("selection: tournament size must be >= 2");
    }
    if (const auto* st = std::get_if<select_scheme::StochasticBinaryTournament>(&config.selection)) {
        if (st->p < 0.5 || st->p > 1.0)
            throw ConfigError("selection: stochastic tournament p must lie in [0.5,1]");
    }
    for (const auto& h : config.hooks) {
        if (const auto* fs = std::get_if<hook::FrontSnapshotWriter>(&h)) {
            if (fs->every < 1)
                throw ConfigError("hooks: snapshot interval must be >= 1");
        }
        if (std::holds_alternative<hook::ArchiveDeltaMetric>(h) && !config.archive)
            throw ConfigError("hooks: archive-delta metric requires an archive");
    }
}

bool should_stop(const EngineState& state, const StoppingCriterion& criterion) {
    auto basic = [&](const stop::Basic& b) {
        return std::visit(
            [&](const auto& c) -> bool {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, stop::MaxGenerations>)
                    return state.generation >= c.generations;
                else if constexpr (std::is_same_v<T, stop::MaxEvaluations>)
                    return state.evaluations >= c.evaluations;
                else {
                    auto elapsed = std::chrono::duration<double>(
                                       std::chrono::steady_clock::now() - state.start_time)
                                       .count();
                    return elapsed >= c.seconds;
                }
            },
            b);
    };
    if (const auto* comb = std::get_if<stop::Combined>(&criterion))
        return std::any_of(comb->criteria.begin(), comb->criteria.end(), basic);
    return std::visit(
        [&](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, stop::Combined>)
                return false; // handled above
            else
                return basic(stop::Basic{c});
        },
        criterion);
}

namespace {

Population nondominated_individuals(const Population& pop, const ObjectiveSpace& space) {
    Population out;
    for (const auto& x : pop) {
        bool dup = std::any_of(out.begin(), out.end(), [&](const Individual& y) {
            return *y.objectives == *x.objectives;
        });
        if (dup)
            continue;
        bool dominated = std::any_of(pop.begin(), pop.end(), [&](const Individual& y) {
            return pareto_compare(*y.objectives, *x.objectives, space) ==
                   DominanceOutcome::Dominates;
        });
        if (!dominated)
            out.push_back(x);
    }
    return out;
}

struct HookRunner {
    const ObjectiveSpace& space;
    std::vector<CheckpointHook> hooks;
    std::vector<std::string> columns;
    std::vector<ObjectiveVector> prev_archive_snapshot;

    explicit HookRunner(const ObjectiveSpace& s, const std::vector<CheckpointHook>& configured,
                        bool has_archive)
        : space(s), hooks(configured) {
        bool has_updater = std::any_of(hooks.begin(), hooks.end(), [](const CheckpointHook& h) {
            return std::holds_alternative<hook::ArchiveUpdater>(h);
        });
        if (has_archive && !has_updater)
            hooks.insert(hooks.begin(), hook::ArchiveUpdater{});
        for (const auto& h : hooks) {
            if (std::holds_alternative<hook::IndicatorProgress>(h))
                columns.push_back("hypervolume");
            if (const auto* d = std::get_if<hook::ArchiveDeltaMetric>(&h))
                columns.push_back(std::holds_alternative<AdditiveEpsilonIndicator>(d->indicator)
                                      ? "delta_eps+"
                                      : "delta_hvd");
        }
    }

    // Returns one progress value per recording hook; empty on the initial
    // tick (generation 0 precedes the first generation).
    std::vector<double> tick(long generation, const Population& pop, Archive* archive,
                             bool initial) {
        std::vector<double> values;
        auto current_front = [&]() -> std::vector<ObjectiveVector> {
            if (archive)
                return archive->front();
            std::vector<ObjectiveVector> pts;
            for (const auto& x : nondominated_individuals(pop, space))
                pts.push_back(*x.objectives);
            return pts;
        };
        for (const auto& h : hooks) {
            std::visit(
                [&](const auto& hk) {
                    using T = std::decay_t<decltype(hk)>;
                    if constexpr (std::is_same_v<T, hook::ArchiveUpdater>) {
                        if (archive)
                            archive->update(pop);
                    } else if constexpr (std::is_same_v<T, hook::FrontSnapshotWriter>) {
                        if (generation % hk.every != 0)
                            return;
                        try {
                            std::filesystem::create_directories(hk.directory);
                            write_front(Front{current_front(), space},
                                        hk.directory + "/gen-" + std::to_string(generation) +
                                            ".front");
                        } catch (const std::exception& e) {
                            std::clog << "warning: front snapshot failed: " << e.what() << "\n";
                        }
                    } else if constexpr (std::is_same_v<T, hook::IndicatorProgress>) {
                        if (!initial)
                            values.push_back(
                                hypervolume(Front{current_front(), space}, hk.reference).value);
                    } else {
                        auto snapshot = archive->front();
                        if (!initial)
                            values.push_back(binary_indicator_value(
                                hk.indicator, Front{snapshot, space},
                                Front{prev_archive_snapshot, space}));
                        prev_archive_snapshot = std::move(snapshot);
                    }
                },
                h);
        }
        return values;
    }
};

} // namespace

RunResult run(const RunConfig& config) {
    return run(config, make_problem(config.problem));
}

RunResult run(const RunConfig& config, const Problem& prob) {
    validate_config(config);
    const ObjectiveSpace& space = prob.space;
    const VariationPipeline& pipe = config.pipeline ? *config.pipeline : prob.default_pipeline;
    Rng rng(config.seed);

    std::optional<Archive> archive;
    if (config.archive)
        archive.emplace(config.archive->kind, config.archive->relation, space);
    Population* archive_pop = archive ? &archive->members() : nullptr;
    // Archive members only need scores when something reads them: elitist
    // selection compares them, SPEA2 fitness unions over them. Skipping
    // otherwise keeps refit cost independent of the archive size.
    bool archive_scored = std::holds_alternative<select_scheme::Elitist>(config.selection) ||
                          std::holds_alternative<fitness::Spea2>(config.fitness_strategy);
    Population* scoring_archive = archive_scored ? archive_pop : nullptr;

    HookRunner hooks(space, config.hooks, archive.has_value());

    EngineState state;
    state.start_time = std::chrono::steady_clock::now();

    RunResult result;
    result.progress_columns = hooks.columns;

    auto scored = [&](Population& p) {
        assign_scores(p, space, config.fitness_strategy, config.diversity_strategy,
                      scoring_archive);
    };

    try {
        Population pop = initialize_population(prob.initializer, config.population_size, rng);
        state.evaluations += static_cast<long>(evaluate(pop, prob.evaluator));
        hooks.tick(0, pop, archive ? &*archive : nullptr, true);
        scored(pop);

        while (!should_stop(state, config.stopping)) {
            Population parents;
            parents.reserve(config.population_size);
            for (std::size_t i = 0; i < config.population_size; ++i)
                parents.push_back(select(pop, archive_pop, config.selection, rng));

            Population offspring = apply_variation(parents, pipe, rng);
            state.evaluations += static_cast<long>(evaluate(offspring, prob.evaluator));

            if (std::holds_alternative<replace_scheme::Generational>(config.replacement)) {
                pop = std::move(offspring);
            } else {
                pop = replace(pop, offspring, config.replacement, config.population_size, scored);
            }

            ++state.generation;
            std::vector<double> values =
                hooks.tick(state.generation, pop, archive ? &*archive : nullptr, false);
            scored(pop);
            result.progress.push_back(ProgressRow{state.generation, state.evaluations,
                                                  std::move(values)});
        }

        result.generations = state.generation;
        result.evaluations = state.evaluations;
        result.front = archive ? archive->members() : nondominated_individuals(pop, space);
        result.population = std::move(pop);
        return result;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error("run failed at generation " + std::to_string(state.generation) +
                                 ", evaluation " + std::to_string(state.evaluations) + ": " +
                                 e.what());
    }
}

} // namespace emo
