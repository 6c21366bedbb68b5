#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "emo/archive.hpp"
#include "emo/problems.hpp"
#include "emo/replacement.hpp"
#include "emo/scores.hpp"
#include "emo/selection.hpp"

namespace emo {

namespace stop {

struct MaxGenerations {
    long generations = 100;
    bool operator==(const MaxGenerations&) const = default;
};
struct MaxEvaluations {
    long evaluations = 10000;
    bool operator==(const MaxEvaluations&) const = default;
};
struct MaxWallTime {
    double seconds = 60.0;
    bool operator==(const MaxWallTime&) const = default;
};

using Basic = std::variant<MaxGenerations, MaxEvaluations, MaxWallTime>;

/// Stops once any embedded criterion is satisfied.
struct Combined {
    std::vector<Basic> criteria;
    bool operator==(const Combined&) const = default;
};

} // namespace stop

using StoppingCriterion =
    std::variant<stop::MaxGenerations, stop::MaxEvaluations, stop::MaxWallTime, stop::Combined>;

namespace hook {

/// Offers the whole current population to the run's archive.
struct ArchiveUpdater {
    bool operator==(const ArchiveUpdater&) const = default;
};
/// Writes the current front to `<directory>/gen-<g>.front` when
/// generation % every == 0.
struct FrontSnapshotWriter {
    std::string directory;
    long every = 1;
    bool operator==(const FrontSnapshotWriter&) const = default;
};
/// Appends the hypervolume of the current front (archive contents, or the
/// population's nondominated subset) to the progress series, once per
/// generation.
struct IndicatorProgress {
    ObjectiveVector reference;
    bool operator==(const IndicatorProgress&) const = default;
};
/// Binary indicator between the current archive snapshot and the previous
/// generation's, once per generation.
struct ArchiveDeltaMetric {
    BinaryIndicator indicator = AdditiveEpsilonIndicator{};
    bool operator==(const ArchiveDeltaMetric&) const = default;
};

} // namespace hook

using CheckpointHook = std::variant<hook::ArchiveUpdater, hook::FrontSnapshotWriter,
                                    hook::IndicatorProgress, hook::ArchiveDeltaMetric>;

struct ArchiveConfig {
    ArchiveKind kind = archive_kind::Unbounded{};
    DominanceRelation relation = rel::Pareto{};
    bool operator==(const ArchiveConfig&) const = default;
};

/// Full declarative description of one optimization run.
struct RunConfig {
    ProblemSpec problem = ZdtSpec{};
    std::size_t population_size = 100;
    SelectionScheme selection = select_scheme::DeterministicTournament{2};
    std::optional<VariationPipeline> pipeline; // nullopt: problem default
    fitness::FitnessStrategy fitness_strategy = fitness::DominanceDepth{};
    diversity::DiversityStrategy diversity_strategy = diversity::Crowding{};
    ReplacementScheme replacement = replace_scheme::IterativeElitist{};
    std::optional<ArchiveConfig> archive;
    StoppingCriterion stopping = stop::MaxGenerations{100};
    std::vector<CheckpointHook> hooks;
    std::uint64_t seed = 0;
};

/// Throws ConfigError on invalid or incompatible components.
void validate_config(const RunConfig& config);

struct EngineState {
    long generation = 0;
    long evaluations = 0;
    std::chrono::steady_clock::time_point start_time;
};

bool should_stop(const EngineState& state, const StoppingCriterion& criterion);

struct ProgressRow {
    long generation = 0;
    long evaluations = 0;
    std::vector<double> values; // one per recording hook, in hook order
};

struct RunResult {
    Population population;
    Population front; // archive contents, or the population's nondominated subset
    long generations = 0;
    long evaluations = 0;
    std::vector<std::string> progress_columns;
    std::vector<ProgressRow> progress; // one row per generation executed
};

RunResult run(const RunConfig& config);

/// Variant taking a prebuilt problem (config.problem is ignored); lets
/// callers instrument the evaluator.
RunResult run(const RunConfig& config, const Problem& problem);

} // namespace emo
