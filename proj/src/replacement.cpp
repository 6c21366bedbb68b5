#include "emo/replacement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace emo {

Population replace(const Population& parents, const Population& offspring,
                   const ReplacementScheme& scheme, std::size_t n, const Refit& refit) {
    using namespace replace_scheme;
    if (std::holds_alternative<Generational>(scheme)) {
        if (n != offspring.size())
            throw std::invalid_argument("generational replacement requires N == |offspring|");
        return offspring;
    }
    if (n > parents.size() + offspring.size())
        throw std::invalid_argument("replacement target size exceeds union size");
    if (!refit)
        throw std::invalid_argument("elitist replacement requires a refit procedure");

    Population pool = parents;
    pool.insert(pool.end(), offspring.begin(), offspring.end());

    if (std::holds_alternative<OneShotElitist>(scheme)) {
        refit(pool);
        std::vector<std::size_t> order(pool.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return key_better(pool[a], a, pool[b], b);
        });
        Population out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(pool[order[i]]);
        return out;
    }

    while (pool.size() > n) {
        refit(pool);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(key_worst_index(pool)));
    }
    refit(pool);
    return pool;
}

} // namespace emo
