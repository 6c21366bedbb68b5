#include "emo/individual.hpp"

#include <stdexcept>

namespace emo {

void check_genotype(const Genotype& g) {
    std::visit(
        [](const auto& gt) {
            using T = std::decay_t<decltype(gt)>;
            if constexpr (std::is_same_v<T, RealVector>) {
                if (gt.genes.size() != gt.bounds.size())
                    throw std::invalid_argument("RealVector genes/bounds length mismatch");
                for (std::size_t i = 0; i < gt.genes.size(); ++i) {
                    auto [lo, hi] = gt.bounds[i];
                    if (lo > hi)
                        throw std::invalid_argument("RealVector bound with lo > hi");
                    if (gt.genes[i] < lo || gt.genes[i] > hi)
                        throw std::invalid_argument("RealVector gene out of bounds");
                }
            } else if constexpr (std::is_same_v<T, Permutation>) {
                std::vector<bool> seen(gt.order.size(), false);
                for (auto v : gt.order) {
                    if (v >= gt.order.size() || seen[v])
                        throw std::invalid_argument("Permutation is not a bijection on 0..L-1");
                    seen[v] = true;
                }
            }
            // BitVector has no invariant beyond its length
        },
        g);
}

namespace {
double require(const std::optional<double>& v, const char* what) {
    if (!v)
        throw std::logic_error(std::string("comparison requires assigned ") + what);
    return *v;
}
} // namespace

bool key_better(const Individual& a, std::size_t index_a,
                const Individual& b, std::size_t index_b) {
    double fa = require(a.fitness, "fitness"), fb = require(b.fitness, "fitness");
    if (fa != fb)
        return fa > fb;
    double da = require(a.diversity, "diversity"), db = require(b.diversity, "diversity");
    if (da != db)
        return da > db;
    return index_a < index_b;
}

std::size_t key_best_index(const Population& pop) {
    if (pop.empty())
        throw std::invalid_argument("empty population");
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (key_better(pop[i], i, pop[best], best))
            best = i;
    return best;
}

std::size_t key_worst_index(const Population& pop) {
    if (pop.empty())
        throw std::invalid_argument("empty population");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (key_better(pop[worst], worst, pop[i], i))
            worst = i;
    return worst;
}

} // namespace emo
