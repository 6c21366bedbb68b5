#pragma once

#include <optional>
#include <string>

#include "emo/engine.hpp"

namespace emo {

enum class PresetName { Nsga2, Spea2, Ibea };

/// Accepts "nsga2", "spea2", "ibea"; throws ConfigError otherwise.
PresetName preset_from_string(const std::string& name);
std::string to_string(PresetName name);

struct PresetParams {
    std::optional<std::size_t> archive_capacity; // SPEA2; defaults to N
    double kappa = 0.05;                         // IBEA
    BinaryIndicator indicator = AdditiveEpsilonIndicator{}; // IBEA
};

/// Builds the component composition of the named algorithm:
///   NSGA-II: dominance depth + crowding, binary tournament, iterative
///            elitist replacement, no archive.
///   SPEA2:   strength/raw/density fitness + nearest-neighbor diversity,
///            binary tournament over the archive (population fallback),
///            generational replacement, fixed-size archive.
///   IBEA:    indicator-based fitness, no diversity, binary tournament,
///            iterative elitist replacement, no archive.
RunConfig build_preset(PresetName name, ProblemSpec problem, std::size_t population_size,
                       StoppingCriterion budget, PresetParams params = {});

} // namespace emo
