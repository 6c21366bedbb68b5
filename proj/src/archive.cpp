#include "emo/archive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace emo {

namespace {

double euclidean(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

Archive::Archive(ArchiveKind kind, DominanceRelation relation, ObjectiveSpace space)
    : kind_(std::move(kind)), relation_(std::move(relation)), space_(std::move(space)) {}

std::vector<ObjectiveVector> Archive::front() const {
    std::vector<ObjectiveVector> out;
    out.reserve(members_.size());
    for (const auto& m : members_)
        out.push_back(*m.objectives);
    return out;
}

std::size_t Archive::update(const Population& candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!candidates[i].valid || !candidates[i].objectives)
            throw std::invalid_argument("archive candidate " + std::to_string(i) +
                                        " has no objectives");
        space_.check(*candidates[i].objectives);
    }
    return std::visit(
        [&](const auto& k) -> std::size_t {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, archive_kind::Unbounded>) {
                return update_dominating(candidates);
            } else if constexpr (std::is_same_v<T, archive_kind::Bounded>) {
                std::size_t accepted = 0;
                for (const auto& c : candidates) {
                    Population one{c};
                    accepted += update_dominating(one);
                    if (members_.size() > k.capacity)
                        truncate_bounded(k);
                }
                return accepted;
            } else {
                return update_fixed_size(candidates, k.capacity);
            }
        },
        kind_);
}

std::size_t Archive::update_dominating(const Population& candidates) {
    std::size_t accepted = 0;
    for (const auto& c : candidates) {
        const ObjectiveVector& z = *c.objectives;
        bool rejected = false;
        for (const auto& m : members_) {
            if (*m.objectives == z) {
                rejected = true; // objective-space duplicate, first kept
                break;
            }
            DominanceOutcome o = relation_compare(*m.objectives, z, space_, relation_);
            if (o == DominanceOutcome::Dominates) {
                rejected = true;
                break;
            }
        }
        if (rejected)
            continue;
        std::erase_if(members_, [&](const Individual& m) {
            return relation_compare(z, *m.objectives, space_, relation_) ==
                   DominanceOutcome::Dominates;
        });
        members_.push_back(c);
        ++accepted;
    }
    return accepted;
}

void Archive::truncate_bounded(const archive_kind::Bounded& spec) {
    while (members_.size() > spec.capacity) {
        apply_diversity_strategy(members_, space_, spec.truncation);
        std::size_t worst = 0;
        for (std::size_t i = 1; i < members_.size(); ++i) {
            // drop smallest diversity; ties drop the newest member
            if (*members_[i].diversity <= *members_[worst].diversity)
                worst = i;
        }
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(worst));
    }
}

std::size_t Archive::update_fixed_size(const Population& candidates, std::size_t capacity) {
    std::size_t before = members_.size();
    Population pool = members_;
    for (const auto& c : candidates) {
        bool dup = std::any_of(pool.begin(), pool.end(), [&](const Individual& m) {
            return *m.objectives == *c.objectives;
        });
        if (!dup)
            pool.push_back(c);
    }

    std::vector<bool> dominated(pool.size(), false);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (i != j && relation_compare(*pool[j].objectives, *pool[i].objectives, space_,
                                           relation_) == DominanceOutcome::Dominates) {
                dominated[i] = true;
                break;
            }

    Population next;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!dominated[i])
            next.push_back(pool[i]);

    if (next.size() > capacity) {
        members_ = std::move(next);
        truncate_knn_lexicographic(capacity);
    } else {
        if (next.size() < capacity) {
            // fill with the best dominated candidates by SPEA2 fitness
            Population scored = pool;
            Population empty;
            assign_spea2_fitness(scored, empty, space_, relation_);
            std::vector<std::size_t> dominated_idx;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (dominated[i])
                    dominated_idx.push_back(i);
            std::sort(dominated_idx.begin(), dominated_idx.end(), [&](std::size_t a, std::size_t b) {
                if (*scored[a].fitness != *scored[b].fitness)
                    return *scored[a].fitness > *scored[b].fitness;
                return a < b;
            });
            for (std::size_t i : dominated_idx) {
                if (next.size() >= capacity)
                    break;
                next.push_back(pool[i]);
            }
        }
        members_ = std::move(next);
    }

    // Accepted = members that were not present before this update.
    std::size_t accepted = 0;
    for (const auto& m : members_) {
        bool was_member = false;
        for (std::size_t i = 0; i < before; ++i)
            if (*pool[i].objectives == *m.objectives) {
                was_member = true;
                break;
            }
        if (!was_member)
            ++accepted;
    }
    return accepted;
}

void Archive::truncate_knn_lexicographic(std::size_t capacity) {
    while (members_.size() > capacity) {
        std::size_t n = members_.size();
        std::vector<std::vector<double>> dists(n);
        for (std::size_t i = 0; i < n; ++i) {
            dists[i].reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    dists[i].push_back(euclidean(*members_[i].objectives, *members_[j].objectives));
            std::sort(dists[i].begin(), dists[i].end());
        }
        std::size_t victim = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (dists[i] < dists[victim])
                victim = i;
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
}

} // namespace emo
