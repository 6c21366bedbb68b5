#pragma once

#include <map>
#include <string>

#include "emo/engine.hpp"

namespace emo {

/// Flat key-value experiment description (`key = value` lines, `#`
/// comments). Unknown keys are rejected at parse time; values are kept
/// verbatim so parse -> serialize -> parse is the identity.
struct ExperimentConfig {
    std::map<std::string, std::string> entries;

    bool operator==(const ExperimentConfig&) const = default;

    bool has(const std::string& key) const { return entries.count(key) != 0; }
    void set(const std::string& key, std::string value) { entries[key] = std::move(value); }
};

ExperimentConfig parse_experiment_config(const std::string& text,
                                         const std::string& origin = "<config>");
ExperimentConfig load_experiment_config(const std::string& path);

/// Canonical key order, documented in the README.
std::string serialize_experiment_config(const ExperimentConfig& config);

struct BuiltExperiment {
    RunConfig run;
    ExperimentConfig resolved; // every component spelled out, round-trippable
};

/// Resolves the config into a runnable RunConfig. `snapshot_dir_default`
/// is used when snapshots are enabled without an explicit directory.
BuiltExperiment build_experiment(const ExperimentConfig& config,
                                 const std::string& snapshot_dir_default = "snapshots");

} // namespace emo
