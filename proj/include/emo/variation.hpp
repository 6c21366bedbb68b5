#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "emo/individual.hpp"

namespace emo {

using Initializer = std::function<Genotype(Rng&)>;

struct Evaluator {
    ObjectiveSpace space;
    std::function<ObjectiveVector(const Genotype&)> fn;
    bool reentrant = false;
};

Population initialize_population(const Initializer& init, std::size_t size, Rng& rng);

/// Evaluates every member with valid=false, in population order; members
/// already valid are skipped. Returns the number of evaluator calls made.
std::size_t evaluate(Population& pop, const Evaluator& evaluator);

using Crossover = std::function<std::pair<Genotype, Genotype>(const Genotype&, const Genotype&, Rng&)>;
using Mutation = std::function<Genotype(const Genotype&, Rng&)>;

struct VariationPipeline {
    Crossover crossover;        // may be empty
    double crossover_rate = 0.0;
    Mutation mutation;          // may be empty
    double mutation_rate = 0.0;
};

/// Pairs parents (0,1),(2,3),... and applies crossover with probability
/// crossover_rate, then mutation to each child with probability
/// mutation_rate. An odd leftover parent passes through to mutation only.
/// Children whose genotype changed are invalidated; unchanged ones keep
/// their objectives and scores.
Population apply_variation(const Population& parents, const VariationPipeline& pipeline, Rng& rng);

// Concrete operators.

/// Simulated binary crossover for real vectors, per-gene recombination
/// probability 0.5, children clamped to the gene bounds.
Crossover sbx_crossover(double eta = 15.0);

/// Polynomial mutation, per-gene rate defaulting to 1/L when rate <= 0.
Mutation polynomial_mutation(double eta = 20.0, double per_gene_rate = -1.0);

Crossover one_point_crossover();
std::pair<BitVector, BitVector> one_point_crossover_at(const BitVector& a, const BitVector& b,
                                                       std::size_t cut);

/// Per-gene bit flip, rate defaulting to 1/L when rate <= 0.
Mutation bit_flip_mutation(double per_gene_rate = -1.0);

/// Order crossover (OX) for permutations.
Crossover order_crossover();
Mutation swap_mutation();

// Standard random initializers for the three genotype kinds.
Initializer uniform_real_initializer(std::vector<std::pair<double, double>> bounds);
Initializer random_bits_initializer(std::size_t length);
Initializer random_permutation_initializer(std::size_t length);

/// Round-robin over several initializers, advancing one step per call.
Initializer combined_initializer(std::vector<Initializer> parts);

} // namespace emo
