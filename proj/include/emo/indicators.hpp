#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "emo/objective.hpp"

namespace emo {

/// An approximation set in objective space. Duplicates are permitted on
/// input; operations deduplicate internally where required.
struct Front {
    std::vector<ObjectiveVector> points;
    ObjectiveSpace space;
};

/// Nondominated subset of a point set under Pareto dominance, duplicates
/// removed (first occurrence kept), input order preserved.
std::vector<ObjectiveVector> nondominated_subset(const std::vector<ObjectiveVector>& points,
                                                 const ObjectiveSpace& space);

struct HypervolumeResult {
    double value = 0.0;
    bool estimate = false;  // true when Monte Carlo was used (3+ objectives)
    std::size_t samples = 0;
};

inline constexpr std::size_t kDefaultHypervolumeSamples = 100000;

/// Lebesgue measure of the region weakly dominated by the front and
/// bounded by ref. Exact sweep for 2 objectives, seeded Monte Carlo
/// estimate otherwise. The reference must be strictly worse than every
/// front point in every objective; empty fronts measure 0.
HypervolumeResult hypervolume(const Front& front, const ObjectiveVector& ref,
                              std::size_t mc_samples = kDefaultHypervolumeSamples,
                              std::uint64_t seed = 0);

/// Monte Carlo estimator usable at any objective count; exposed for
/// cross-validation against the exact sweep.
double hypervolume_monte_carlo(const Front& front, const ObjectiveVector& ref,
                               std::size_t samples, std::uint64_t seed);

/// I_HD(A,B) = hypervolume(A ∪ B) - hypervolume(B).
double binary_hypervolume(const Front& a, const Front& b, const ObjectiveVector& ref,
                          std::size_t mc_samples = kDefaultHypervolumeSamples,
                          std::uint64_t seed = 0);

enum class EpsilonMode { Additive, Multiplicative };

/// Additive: I_eps+(A,B) = max_{b in B} min_{a in A} max_i (a_i - b_i);
/// multiplicative uses the ratio a_i / b_i and requires strictly positive
/// coordinates after normalization to minimization.
double epsilon_indicator(const Front& a, const Front& b, EpsilonMode mode);

/// Share of the union's nondominated set owned by A, shared points
/// counting one half; in [0,1].
double contribution(const Front& a, const Front& b);

// Binary indicator selector used by indicator-based fitness and the
// archive-delta checkpoint hook.
struct AdditiveEpsilonIndicator {
    bool operator==(const AdditiveEpsilonIndicator&) const = default;
};
struct HypervolumeDifferenceIndicator {
    ObjectiveVector reference;
    bool operator==(const HypervolumeDifferenceIndicator&) const = default;
};
using BinaryIndicator = std::variant<AdditiveEpsilonIndicator, HypervolumeDifferenceIndicator>;

double binary_indicator_value(const BinaryIndicator& ind, const Front& a, const Front& b);

} // namespace emo
