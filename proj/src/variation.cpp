#include "emo/variation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace emo {

Population initialize_population(const Initializer& init, std::size_t size, Rng& rng) {
    if (size == 0)
        throw std::invalid_argument("population size must be >= 1");
    Population pop;
    pop.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        Individual ind;
        ind.genotype = init(rng);
        check_genotype(ind.genotype);
        pop.push_back(std::move(ind));
    }
    return pop;
}

std::size_t evaluate(Population& pop, const Evaluator& evaluator) {
    std::size_t calls = 0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (pop[i].valid)
            continue;
        try {
            ObjectiveVector z = evaluator.fn(pop[i].genotype);
            evaluator.space.check(z);
            pop[i].objectives = std::move(z);
            pop[i].valid = true;
            ++calls;
        } catch (const std::exception& e) {
            throw std::runtime_error("evaluation failed at individual " + std::to_string(i) +
                                     ": " + e.what());
        }
    }
    return calls;
}

Population apply_variation(const Population& parents, const VariationPipeline& pipeline, Rng& rng) {
    if (parents.empty())
        throw std::invalid_argument("apply_variation: empty parent population");
    if (pipeline.crossover_rate < 0.0 || pipeline.crossover_rate > 1.0 ||
        pipeline.mutation_rate < 0.0 || pipeline.mutation_rate > 1.0)
        throw std::invalid_argument("variation rates must lie in [0,1]");

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Population offspring;
    offspring.reserve(parents.size());

    for (std::size_t i = 0; i < parents.size(); i += 2) {
        if (i + 1 < parents.size()) {
            Individual a = parents[i];
            Individual b = parents[i + 1];
            if (pipeline.crossover && coin(rng) < pipeline.crossover_rate) {
                auto [ca, cb] = pipeline.crossover(a.genotype, b.genotype, rng);
                a.genotype = std::move(ca);
                b.genotype = std::move(cb);
            }
            offspring.push_back(std::move(a));
            offspring.push_back(std::move(b));
        } else {
            offspring.push_back(parents[i]); // odd leftover, mutation only
        }
    }

    for (Individual& child : offspring) {
        if (pipeline.mutation && coin(rng) < pipeline.mutation_rate)
            child.genotype = pipeline.mutation(child.genotype, rng);
    }

    for (std::size_t i = 0; i < offspring.size(); ++i) {
        check_genotype(offspring[i].genotype);
        if (!(offspring[i].genotype == parents[i].genotype))
            offspring[i].invalidate();
    }
    return offspring;
}

namespace {

const RealVector& as_real(const Genotype& g) {
    if (const auto* p = std::get_if<RealVector>(&g))
        return *p;
    throw std::invalid_argument("operator expects a RealVector genotype");
}
const BitVector& as_bits(const Genotype& g) {
    if (const auto* p = std::get_if<BitVector>(&g))
        return *p;
    throw std::invalid_argument("operator expects a BitVector genotype");
}
const Permutation& as_perm(const Genotype& g) {
    if (const auto* p = std::get_if<Permutation>(&g))
        return *p;
    throw std::invalid_argument("operator expects a Permutation genotype");
}

double clamp_gene(double x, std::pair<double, double> b) {
    return std::min(std::max(x, b.first), b.second);
}

} // namespace

Crossover sbx_crossover(double eta) {
    return [eta](const Genotype& ga, const Genotype& gb, Rng& rng) {
        const RealVector& a = as_real(ga);
        const RealVector& b = as_real(gb);
        if (a.genes.size() != b.genes.size())
            throw std::invalid_argument("sbx: parent length mismatch");
        RealVector ca = a, cb = b;
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (std::size_t i = 0; i < a.genes.size(); ++i) {
            if (uni(rng) > 0.5)
                continue;
            double x1 = a.genes[i], x2 = b.genes[i];
            if (std::abs(x1 - x2) < 1e-14)
                continue;
            double u = uni(rng);
            double beta = u <= 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                                   : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
            double c1 = 0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2);
            double c2 = 0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2);
            ca.genes[i] = clamp_gene(c1, a.bounds[i]);
            cb.genes[i] = clamp_gene(c2, b.bounds[i]);
        }
        return std::pair<Genotype, Genotype>{std::move(ca), std::move(cb)};
    };
}

Mutation polynomial_mutation(double eta, double per_gene_rate) {
    return [eta, per_gene_rate](const Genotype& g, Rng& rng) {
        RealVector v = as_real(g);
        double rate = per_gene_rate > 0.0 ? per_gene_rate
                                          : 1.0 / static_cast<double>(std::max<std::size_t>(1, v.genes.size()));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (std::size_t i = 0; i < v.genes.size(); ++i) {
            if (uni(rng) >= rate)
                continue;
            auto [lo, hi] = v.bounds[i];
            double span = hi - lo;
            if (span <= 0.0)
                continue;
            double x = v.genes[i];
            double d1 = (x - lo) / span, d2 = (hi - x) / span;
            double u = uni(rng);
            double dq;
            if (u < 0.5) {
                double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
                dq = std::pow(val, 1.0 / (eta + 1.0)) - 1.0;
            } else {
                double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
                dq = 1.0 - std::pow(val, 1.0 / (eta + 1.0));
            }
            v.genes[i] = clamp_gene(x + dq * span, v.bounds[i]);
        }
        return Genotype{std::move(v)};
    };
}

std::pair<BitVector, BitVector> one_point_crossover_at(const BitVector& a, const BitVector& b,
                                                       std::size_t cut) {
    if (a.bits.size() != b.bits.size())
        throw std::invalid_argument("one-point crossover: parent length mismatch");
    if (cut == 0 || cut >= a.bits.size())
        throw std::invalid_argument("one-point crossover: cut out of range");
    BitVector ca = a, cb = b;
    for (std::size_t i = cut; i < a.bits.size(); ++i) {
        ca.bits[i] = b.bits[i];
        cb.bits[i] = a.bits[i];
    }
    return {std::move(ca), std::move(cb)};
}

Crossover one_point_crossover() {
    return [](const Genotype& ga, const Genotype& gb, Rng& rng) {
        const BitVector& a = as_bits(ga);
        const BitVector& b = as_bits(gb);
        if (a.bits.size() < 2)
            return std::pair<Genotype, Genotype>{a, b};
        std::uniform_int_distribution<std::size_t> cut(1, a.bits.size() - 1);
        auto [ca, cb] = one_point_crossover_at(a, b, cut(rng));
        return std::pair<Genotype, Genotype>{std::move(ca), std::move(cb)};
    };
}

Mutation bit_flip_mutation(double per_gene_rate) {
    return [per_gene_rate](const Genotype& g, Rng& rng) {
        BitVector v = as_bits(g);
        double rate = per_gene_rate > 0.0 ? per_gene_rate
                                          : 1.0 / static_cast<double>(std::max<std::size_t>(1, v.bits.size()));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (std::size_t i = 0; i < v.bits.size(); ++i)
            if (uni(rng) < rate)
                v.bits[i] = !v.bits[i];
        return Genotype{std::move(v)};
    };
}

Crossover order_crossover() {
    return [](const Genotype& ga, const Genotype& gb, Rng& rng) {
        const Permutation& a = as_perm(ga);
        const Permutation& b = as_perm(gb);
        std::size_t n = a.order.size();
        if (b.order.size() != n)
            throw std::invalid_argument("order crossover: parent length mismatch");
        if (n < 2)
            return std::pair<Genotype, Genotype>{a, b};
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t lo = pick(rng), hi = pick(rng);
        if (lo > hi)
            std::swap(lo, hi);
        auto ox = [&](const Permutation& p1, const Permutation& p2) {
            Permutation child;
            child.order.assign(n, 0);
            std::vector<bool> used(n, false);
            for (std::size_t i = lo; i <= hi; ++i) {
                child.order[i] = p1.order[i];
                used[p1.order[i]] = true;
            }
            std::size_t at = (hi + 1) % n;
            for (std::size_t step = 0; step < n; ++step) {
                std::uint32_t v = p2.order[(hi + 1 + step) % n];
                if (used[v])
                    continue;
                child.order[at] = v;
                used[v] = true;
                at = (at + 1) % n;
            }
            return child;
        };
        return std::pair<Genotype, Genotype>{ox(a, b), ox(b, a)};
    };
}

Mutation swap_mutation() {
    return [](const Genotype& g, Rng& rng) {
        Permutation v = as_perm(g);
        if (v.order.size() < 2)
            return Genotype{std::move(v)};
        std::uniform_int_distribution<std::size_t> pick(0, v.order.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        std::swap(v.order[i], v.order[j]);
        return Genotype{std::move(v)};
    };
}

Initializer uniform_real_initializer(std::vector<std::pair<double, double>> bounds) {
    return [bounds = std::move(bounds)](Rng& rng) {
        RealVector v;
        v.bounds = bounds;
        v.genes.reserve(bounds.size());
        for (auto [lo, hi] : bounds) {
            std::uniform_real_distribution<double> uni(lo, hi);
            v.genes.push_back(uni(rng));
        }
        return Genotype{std::move(v)};
    };
}

Initializer random_bits_initializer(std::size_t length) {
    return [length](Rng& rng) {
        BitVector v;
        v.bits.reserve(length);
        std::bernoulli_distribution coin(0.5);
        for (std::size_t i = 0; i < length; ++i)
            v.bits.push_back(coin(rng));
        return Genotype{std::move(v)};
    };
}

Initializer random_permutation_initializer(std::size_t length) {
    return [length](Rng& rng) {
        Permutation v;
        v.order.resize(length);
        std::iota(v.order.begin(), v.order.end(), 0u);
        std::shuffle(v.order.begin(), v.order.end(), rng);
        return Genotype{std::move(v)};
    };
}

Initializer combined_initializer(std::vector<Initializer> parts) {
    if (parts.empty())
        throw std::invalid_argument("combined_initializer: no parts");
    auto next = std::make_shared<std::size_t>(0);
    return [parts = std::move(parts), next](Rng& rng) {
        const Initializer& part = parts[*next % parts.size()];
        ++*next;
        return part(rng);
    };
}

} // namespace emo
