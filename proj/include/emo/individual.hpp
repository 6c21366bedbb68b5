#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "emo/objective.hpp"

namespace emo {

using Rng = std::mt19937_64;

struct RealVector {
    std::vector<double> genes;
    std::vector<std::pair<double, double>> bounds; // per-gene [lo, hi]
    bool operator==(const RealVector&) const = default;
};

struct BitVector {
    std::vector<bool> bits;
    bool operator==(const BitVector&) const = default;
};

struct Permutation {
    std::vector<std::uint32_t> order; // bijection on 0..L-1
    bool operator==(const Permutation&) const = default;
};

using Genotype = std::variant<RealVector, BitVector, Permutation>;

/// Throws std::invalid_argument if the genotype violates its invariants
/// (genes out of bounds, order not a bijection).
void check_genotype(const Genotype& g);

struct Individual {
    Genotype genotype;
    std::optional<ObjectiveVector> objectives;
    std::optional<double> fitness;   // canonical orientation: larger is better
    std::optional<double> diversity; // larger is better
    bool valid = false;              // objectives up to date

    /// Marks objectives stale and clears any assigned scores.
    void invalidate() {
        valid = false;
        objectives.reset();
        fitness.reset();
        diversity.reset();
    }
};

using Population = std::vector<Individual>;

/// Total order on scored individuals: fitness first, diversity second,
/// stable index last. Throws std::logic_error on unscored individuals.
bool key_better(const Individual& a, std::size_t index_a,
                const Individual& b, std::size_t index_b);

/// Index of the ComparisonKey-best / -worst member.
std::size_t key_best_index(const Population& pop);
std::size_t key_worst_index(const Population& pop);

} // namespace emo
