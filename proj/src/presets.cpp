#include "emo/presets.hpp"

#include "emo/errors.hpp"

namespace emo {

PresetName preset_from_string(const std::string& name) {
    if (name == "nsga2")
        return PresetName::Nsga2;
    if (name == "spea2")
        return PresetName::Spea2;
    if (name == "ibea")
        return PresetName::Ibea;
    throw ConfigError("algorithm: unknown preset `" + name + "` (expected nsga2, spea2 or ibea)");
}

std::string to_string(PresetName name) {
    switch (name) {
    case PresetName::Nsga2: return "nsga2";
    case PresetName::Spea2: return "spea2";
    default: return "ibea";
    }
}

RunConfig build_preset(PresetName name, ProblemSpec problem, std::size_t population_size,
                       StoppingCriterion budget, PresetParams params) {
    RunConfig config;
    config.problem = std::move(problem);
    config.population_size = population_size;
    config.stopping = std::move(budget);

    switch (name) {
    case PresetName::Nsga2:
        config.fitness_strategy = fitness::DominanceDepth{rel::Pareto{}};
        config.diversity_strategy = diversity::Crowding{};
        config.selection = select_scheme::DeterministicTournament{2};
        config.replacement = replace_scheme::IterativeElitist{};
        break;
    case PresetName::Spea2:
        config.fitness_strategy = fitness::Spea2{rel::Pareto{}};
        config.diversity_strategy = diversity::NearestNeighbor{std::nullopt};
        config.selection = select_scheme::Elitist{1.0, select_scheme::DeterministicTournament{2},
                                                 select_scheme::DeterministicTournament{2}};
        config.replacement = replace_scheme::Generational{};
        config.archive = ArchiveConfig{
            archive_kind::FixedSize{params.archive_capacity.value_or(population_size)},
            rel::Pareto{}};
        break;
    case PresetName::Ibea:
        if (!(params.kappa > 0.0))
            throw ConfigError("ibea.kappa: must be positive");
        config.fitness_strategy = fitness::IndicatorBased{params.indicator, params.kappa};
        config.diversity_strategy = diversity::Dummy{};
        config.selection = select_scheme::DeterministicTournament{2};
        config.replacement = replace_scheme::IterativeElitist{};
        break;
    }
    return config;
}

} // namespace emo
