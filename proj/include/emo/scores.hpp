#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "emo/indicators.hpp"
#include "emo/individual.hpp"

namespace emo {

namespace fitness {

struct Dummy {
    bool operator==(const Dummy&) const = default;
};
struct AchievementScalarizing {
    std::vector<double> weights; // all > 0
    ObjectiveVector reference;
    double rho = 0.01;
    bool operator==(const AchievementScalarizing&) const = default;
};
struct DominanceRank {
    DominanceRelation relation = rel::Pareto{};
    bool operator==(const DominanceRank&) const = default;
};
struct DominanceCount {
    DominanceRelation relation = rel::Pareto{};
    bool operator==(const DominanceCount&) const = default;
};
struct DominanceDepth {
    DominanceRelation relation = rel::Pareto{};
    bool operator==(const DominanceDepth&) const = default;
};
struct Spea2 {
    DominanceRelation relation = rel::Pareto{};
    bool operator==(const Spea2&) const = default;
};
struct IndicatorBased {
    BinaryIndicator indicator = AdditiveEpsilonIndicator{};
    double kappa = 0.05;
    bool operator==(const IndicatorBased&) const = default;
};

using FitnessStrategy =
    std::variant<Dummy, AchievementScalarizing, DominanceRank, DominanceCount, DominanceDepth,
                 Spea2, IndicatorBased>;

} // namespace fitness

namespace diversity {

struct Dummy {
    bool operator==(const Dummy&) const = default;
};
struct Crowding {
    bool operator==(const Crowding&) const = default;
};
struct Sharing {
    double sigma_share = 0.5;
    double alpha = 1.0;
    bool operator==(const Sharing&) const = default;
};
struct NearestNeighbor {
    std::optional<std::size_t> k; // nullopt: k = floor(sqrt(|pop|)), min 1
    bool operator==(const NearestNeighbor&) const = default;
};

using DiversityStrategy = std::variant<Dummy, Crowding, Sharing, NearestNeighbor>;

} // namespace diversity

using FrontPartition = std::vector<std::vector<std::size_t>>;

// Fitness assignment passes. All write Individual.fitness in canonical
// larger-is-better orientation; all require every member valid.

void assign_dominance_rank(Population& pop, const ObjectiveSpace& space,
                           const DominanceRelation& rel);
void assign_dominance_count(Population& pop, const ObjectiveSpace& space,
                            const DominanceRelation& rel);

/// Partitions the population into nondominated layers; fitness(x) is the
/// negated front index. Returns the fronts as index lists.
FrontPartition assign_dominance_depth(Population& pop, const ObjectiveSpace& space,
                                      const DominanceRelation& rel);

/// SPEA2 strength / raw / density fitness over the union pop ∪ archive;
/// fitness is written to both populations.
void assign_spea2_fitness(Population& pop, Population& archive_members,
                          const ObjectiveSpace& space, const DominanceRelation& rel);

void assign_indicator_fitness(Population& pop, const ObjectiveSpace& space,
                              const BinaryIndicator& indicator, double kappa);

void assign_achievement_scalarizing(Population& pop, const ObjectiveSpace& space,
                                    const std::vector<double>& weights,
                                    const ObjectiveVector& reference, double rho);

// Diversity assignment passes; write Individual.diversity, larger is better.

void assign_crowding(Population& pop, const ObjectiveSpace& space, const FrontPartition& fronts);
void assign_sharing(Population& pop, const ObjectiveSpace& space, double sigma_share, double alpha);
void assign_knn_density(Population& pop, const ObjectiveSpace& space,
                        std::optional<std::size_t> k);

/// Applies a diversity strategy alone (Crowding computes Pareto-depth
/// fronts itself). Used by archive truncation.
void apply_diversity_strategy(Population& pop, const ObjectiveSpace& space,
                              const diversity::DiversityStrategy& div);

/// Applies a fitness strategy followed by a diversity strategy. Crowding
/// reuses the fronts of a DominanceDepth fitness pass when present and
/// computes Pareto-depth fronts otherwise. Spea2 draws its union partner
/// from `archive_members` (may be null). When an archive is given, its
/// members are scored too so elitist selection can compare them.
void assign_scores(Population& pop, const ObjectiveSpace& space,
                   const fitness::FitnessStrategy& fit, const diversity::DiversityStrategy& div,
                   Population* archive_members = nullptr);

} // namespace emo
