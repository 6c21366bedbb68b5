#include "emo/selection.hpp"

#include <stdexcept>

namespace emo {

namespace {

using namespace select_scheme;

const Individual& select_basic(const Population& pop, const Basic& scheme, Rng& rng) {
    if (pop.empty())
        throw std::invalid_argument("select: empty population");
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    return std::visit(
        [&](const auto& s) -> const Individual& {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Random>) {
                return pop[pick(rng)];
            } else if constexpr (std::is_same_v<T, DeterministicTournament>) {
                if (s.m < 2)
                    throw std::invalid_argument("tournament size must be >= 2");
                std::size_t best = pick(rng);
                for (int round = 1; round < s.m; ++round) {
                    std::size_t challenger = pick(rng);
                    if (key_better(pop[challenger], challenger, pop[best], best))
                        best = challenger;
                }
                return pop[best];
            } else {
                if (s.p < 0.5 || s.p > 1.0)
                    throw std::invalid_argument("stochastic tournament p must lie in [0.5, 1]");
                std::size_t a = pick(rng), b = pick(rng);
                if (!key_better(pop[a], a, pop[b], b))
                    std::swap(a, b); // a is the better one
                std::uniform_real_distribution<double> coin(0.0, 1.0);
                return coin(rng) < s.p ? pop[a] : pop[b];
            }
        },
        scheme);
}

} // namespace

const Individual& select(const Population& pop, const Population* archive_members,
                         const SelectionScheme& scheme, Rng& rng) {
    if (pop.empty())
        throw std::invalid_argument("select: empty population");
    if (const auto* e = std::get_if<Elitist>(&scheme)) {
        if (!archive_members)
            throw std::invalid_argument("Elitist selection requires an archive");
        if (e->p_archive < 0.0 || e->p_archive > 1.0)
            throw std::invalid_argument("p_archive must lie in [0, 1]");
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        if (coin(rng) < e->p_archive && !archive_members->empty())
            return select_basic(*archive_members, e->archive_scheme, rng);
        return select_basic(pop, e->population_scheme, rng);
    }
    Basic basic = std::visit(
        [](const auto& s) -> Basic {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Elitist>)
                throw std::logic_error("unreachable");
            else
                return Basic{s};
        },
        scheme);
    return select_basic(pop, basic, rng);
}

} // namespace emo
