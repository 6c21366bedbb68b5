#include "emo/scores.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace emo {

namespace {

void require_valid(const Population& pop) {
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (!pop[i].valid || !pop[i].objectives)
            throw std::invalid_argument("individual " + std::to_string(i) +
                                        " has no up-to-date objectives");
}

double euclidean(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Fast nondominated sort; pure, no fitness writes.
FrontPartition dominance_fronts(const Population& pop, const ObjectiveSpace& space,
                                const DominanceRelation& rel) {
    std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            DominanceOutcome o = relation_compare(*pop[i].objectives, *pop[j].objectives, space, rel);
            if (o == DominanceOutcome::Dominates) {
                dominated_by[i].push_back(j);
                ++count[j];
            } else if (o == DominanceOutcome::DominatedBy) {
                dominated_by[j].push_back(i);
                ++count[i];
            }
        }
    FrontPartition fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (count[i] == 0)
            current.push_back(i);
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated_by[i])
                if (--count[j] == 0)
                    next.push_back(j);
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::size_t auto_k(std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(
                                        static_cast<double>(n)))));
}

// Per-objective min-max normalization to [0,1] in minimization
// orientation; constant objectives map to 0.
std::vector<ObjectiveVector> normalized_min(const Population& pop, const ObjectiveSpace& space) {
    std::size_t n = space.size();
    std::vector<ObjectiveVector> pts;
    pts.reserve(pop.size());
    for (const auto& ind : pop)
        pts.push_back(space.to_minimization(*ind.objectives));
    ObjectiveVector lo(n, std::numeric_limits<double>::infinity());
    ObjectiveVector hi(n, -std::numeric_limits<double>::infinity());
    for (const auto& p : pts)
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    for (auto& p : pts)
        for (std::size_t i = 0; i < n; ++i)
            p[i] = hi[i] > lo[i] ? (p[i] - lo[i]) / (hi[i] - lo[i]) : 0.0;
    return pts;
}

} // namespace

void assign_dominance_rank(Population& pop, const ObjectiveSpace& space,
                           const DominanceRelation& rel) {
    require_valid(pop);
    for (auto& x : pop) {
        std::size_t r = 0;
        for (const auto& y : pop)
            if (relation_compare(*y.objectives, *x.objectives, space, rel) ==
                DominanceOutcome::Dominates)
                ++r;
        x.fitness = -static_cast<double>(r);
    }
}

void assign_dominance_count(Population& pop, const ObjectiveSpace& space,
                            const DominanceRelation& rel) {
    require_valid(pop);
    for (auto& x : pop) {
        std::size_t c = 0;
        for (const auto& y : pop)
            if (relation_compare(*x.objectives, *y.objectives, space, rel) ==
                DominanceOutcome::Dominates)
                ++c;
        x.fitness = static_cast<double>(c);
    }
}

FrontPartition assign_dominance_depth(Population& pop, const ObjectiveSpace& space,
                                      const DominanceRelation& rel) {
    require_valid(pop);
    FrontPartition fronts = dominance_fronts(pop, space, rel);
    for (std::size_t f = 0; f < fronts.size(); ++f)
        for (std::size_t i : fronts[f])
            pop[i].fitness = -static_cast<double>(f);
    return fronts;
}

void assign_spea2_fitness(Population& pop, Population& archive_members,
                          const ObjectiveSpace& space, const DominanceRelation& rel) {
    require_valid(pop);
    require_valid(archive_members);
    std::vector<Individual*> u;
    for (auto& x : pop)
        u.push_back(&x);
    for (auto& x : archive_members)
        u.push_back(&x);
    std::size_t n = u.size();
    if (n == 0)
        return;

    std::vector<std::vector<bool>> dom(n, std::vector<bool>(n, false));
    std::vector<double> strength(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && relation_compare(*u[i]->objectives, *u[j]->objectives, space, rel) ==
                              DominanceOutcome::Dominates) {
                dom[i][j] = true;
                strength[i] += 1.0;
            }

    std::size_t k = auto_k(n);
    for (std::size_t i = 0; i < n; ++i) {
        double raw = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (dom[j][i])
                raw += strength[j];
        double density = 0.0;
        if (n >= 2) {
            std::vector<double> dist;
            dist.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    dist.push_back(euclidean(*u[i]->objectives, *u[j]->objectives));
            std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
            density = 1.0 / (dist[k - 1] + 2.0);
        }
        u[i]->fitness = -(raw + density);
    }
}

void assign_indicator_fitness(Population& pop, const ObjectiveSpace& space,
                              const BinaryIndicator& indicator, double kappa) {
    require_valid(pop);
    if (!(kappa > 0.0))
        throw std::invalid_argument("kappa must be positive");
    std::vector<ObjectiveVector> pts = normalized_min(pop, space);
    // Singleton fronts admit closed forms; avoids per-pair allocations.
    auto pairwise = [&](std::size_t yi, std::size_t xi) {
        const ObjectiveVector& a = pts[yi];
        const ObjectiveVector& b = pts[xi];
        return std::visit(
            [&](const auto& ind) -> double {
                using T = std::decay_t<decltype(ind)>;
                if constexpr (std::is_same_v<T, AdditiveEpsilonIndicator>) {
                    double eps = -std::numeric_limits<double>::infinity();
                    for (std::size_t i = 0; i < a.size(); ++i)
                        eps = std::max(eps, a[i] - b[i]);
                    return eps;
                } else {
                    // I_HD({a},{b}) = HV({a,b}) - HV({b}) = vol(a) - vol(a v b)
                    if (ind.reference.size() != a.size())
                        throw std::invalid_argument(
                            "indicator reference dimension mismatch");
                    double va = 1.0, vc = 1.0;
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        double ra = ind.reference[i] - a[i];
                        double rc = ind.reference[i] - std::max(a[i], b[i]);
                        if (ra < 0.0)
                            throw std::invalid_argument(
                                "indicator reference must be weakly worse than the "
                                "normalized objectives");
                        va *= ra;
                        vc *= std::max(rc, 0.0);
                    }
                    return va - vc;
                }
            },
            indicator);
    };
    for (std::size_t x = 0; x < pop.size(); ++x) {
        double f = 0.0;
        for (std::size_t y = 0; y < pop.size(); ++y)
            if (y != x)
                f -= std::exp(-pairwise(y, x) / kappa);
        pop[x].fitness = f;
    }
}

void assign_achievement_scalarizing(Population& pop, const ObjectiveSpace& space,
                                    const std::vector<double>& weights,
                                    const ObjectiveVector& reference, double rho) {
    require_valid(pop);
    if (weights.size() != space.size())
        throw std::invalid_argument("achievement weights length mismatch");
    for (double w : weights)
        if (!(w > 0.0))
            throw std::invalid_argument("achievement weights must be positive");
    ObjectiveVector ref = space.to_minimization(reference);
    for (auto& x : pop) {
        ObjectiveVector z = space.to_minimization(*x.objectives);
        double worst = -std::numeric_limits<double>::infinity();
        double sum = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            double t = weights[i] * (z[i] - ref[i]);
            worst = std::max(worst, t);
            sum += t;
        }
        x.fitness = -(worst + rho * sum);
    }
}

void assign_crowding(Population& pop, const ObjectiveSpace& space, const FrontPartition& fronts) {
    require_valid(pop);
    std::vector<bool> covered(pop.size(), false);
    for (const auto& front : fronts)
        for (std::size_t i : front) {
            if (i >= pop.size() || covered[i])
                throw std::invalid_argument("fronts do not partition the population");
            covered[i] = true;
        }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw std::invalid_argument("fronts do not partition the population");

    const double inf = std::numeric_limits<double>::infinity();
    for (const auto& front : fronts) {
        // Work on distinct minimization-oriented vectors so duplicates get
        // equal values and population order cannot influence the result.
        std::vector<ObjectiveVector> distinct;
        std::vector<std::size_t> group(front.size()); // member -> distinct vector
        for (std::size_t r = 0; r < front.size(); ++r) {
            ObjectiveVector v = space.to_minimization(*pop[front[r]].objectives);
            auto it = std::find(distinct.begin(), distinct.end(), v);
            if (it == distinct.end()) {
                group[r] = distinct.size();
                distinct.push_back(std::move(v));
            } else {
                group[r] = static_cast<std::size_t>(it - distinct.begin());
            }
        }
        std::vector<double> dist(distinct.size(), 0.0);
        for (std::size_t obj = 0; obj < space.size(); ++obj) {
            std::vector<std::size_t> order(distinct.size());
            std::iota(order.begin(), order.end(), 0u);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (distinct[a][obj] != distinct[b][obj])
                    return distinct[a][obj] < distinct[b][obj];
                return distinct[a] < distinct[b];
            });
            double lo = distinct[order.front()][obj];
            double hi = distinct[order.back()][obj];
            if (hi <= lo)
                continue; // constant objective contributes nothing
            dist[order.front()] = inf;
            dist[order.back()] = inf;
            for (std::size_t r = 1; r + 1 < order.size(); ++r) {
                double prev = distinct[order[r - 1]][obj];
                double next = distinct[order[r + 1]][obj];
                if (dist[order[r]] != inf)
                    dist[order[r]] += (next - prev) / (hi - lo);
            }
        }
        for (std::size_t r = 0; r < front.size(); ++r)
            pop[front[r]].diversity = distinct.size() <= 2 ? inf : dist[group[r]];
    }
}

void assign_sharing(Population& pop, const ObjectiveSpace& space, double sigma_share, double alpha) {
    require_valid(pop);
    (void)space; // distance is measured on raw objective values
    if (!(sigma_share > 0.0))
        throw std::invalid_argument("sigma_share must be positive");
    for (auto& x : pop) {
        double nc = 0.0;
        for (const auto& y : pop) {
            double d = euclidean(*x.objectives, *y.objectives);
            if (d < sigma_share)
                nc += 1.0 - std::pow(d / sigma_share, alpha);
        }
        x.diversity = -nc;
    }
}

void assign_knn_density(Population& pop, const ObjectiveSpace& space,
                        std::optional<std::size_t> k) {
    require_valid(pop);
    (void)space;
    if (pop.size() < 2)
        throw std::invalid_argument("k-nearest-neighbor density needs at least 2 individuals");
    std::size_t kk = k.value_or(auto_k(pop.size()));
    if (kk < 1)
        throw std::invalid_argument("k must be >= 1");
    if (kk >= pop.size()) {
        std::clog << "warning: knn density k=" << kk << " clamped to " << pop.size() - 1 << "\n";
        kk = pop.size() - 1;
    }
    for (auto& x : pop) {
        std::vector<double> dist;
        dist.reserve(pop.size() - 1);
        for (const auto& y : pop)
            if (&y != &x)
                dist.push_back(euclidean(*x.objectives, *y.objectives));
        std::nth_element(dist.begin(), dist.begin() + (kk - 1), dist.end());
        x.diversity = dist[kk - 1];
    }
}

namespace {

// Applies a fitness strategy to one population; returns depth fronts when
// the strategy produces them.
std::optional<FrontPartition> apply_fitness(Population& pop, const ObjectiveSpace& space,
                                            const fitness::FitnessStrategy& fit,
                                            Population* archive_members) {
    using namespace fitness;
    return std::visit(
        [&](const auto& f) -> std::optional<FrontPartition> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Dummy>) {
                require_valid(pop);
                for (auto& x : pop)
                    x.fitness = 0.0;
            } else if constexpr (std::is_same_v<T, AchievementScalarizing>) {
                assign_achievement_scalarizing(pop, space, f.weights, f.reference, f.rho);
            } else if constexpr (std::is_same_v<T, DominanceRank>) {
                assign_dominance_rank(pop, space, f.relation);
            } else if constexpr (std::is_same_v<T, DominanceCount>) {
                assign_dominance_count(pop, space, f.relation);
            } else if constexpr (std::is_same_v<T, DominanceDepth>) {
                return assign_dominance_depth(pop, space, f.relation);
            } else if constexpr (std::is_same_v<T, Spea2>) {
                Population empty;
                assign_spea2_fitness(pop, archive_members ? *archive_members : empty, space,
                                     f.relation);
            } else {
                assign_indicator_fitness(pop, space, f.indicator, f.kappa);
            }
            return std::nullopt;
        },
        fit);
}

void apply_diversity(Population& pop, const ObjectiveSpace& space,
                     const diversity::DiversityStrategy& div, const FrontPartition* fronts) {
    using namespace diversity;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Dummy>) {
                require_valid(pop);
                for (auto& x : pop)
                    x.diversity = 0.0;
            } else if constexpr (std::is_same_v<T, Crowding>) {
                if (fronts) {
                    assign_crowding(pop, space, *fronts);
                } else {
                    FrontPartition computed = dominance_fronts(pop, space, rel::Pareto{});
                    assign_crowding(pop, space, computed);
                }
            } else if constexpr (std::is_same_v<T, Sharing>) {
                assign_sharing(pop, space, d.sigma_share, d.alpha);
            } else {
                if (pop.size() < 2) {
                    require_valid(pop);
                    for (auto& x : pop)
                        x.diversity = 0.0;
                } else {
                    assign_knn_density(pop, space, d.k);
                }
            }
        },
        div);
}

} // namespace

void apply_diversity_strategy(Population& pop, const ObjectiveSpace& space,
                              const diversity::DiversityStrategy& div) {
    apply_diversity(pop, space, div, nullptr);
}

void assign_scores(Population& pop, const ObjectiveSpace& space,
                   const fitness::FitnessStrategy& fit, const diversity::DiversityStrategy& div,
                   Population* archive_members) {
    std::optional<FrontPartition> fronts = apply_fitness(pop, space, fit, archive_members);
    apply_diversity(pop, space, div, fronts ? &*fronts : nullptr);
    // Spea2 already scored the archive as part of its union pass.
    if (archive_members && !archive_members->empty()) {
        if (!std::holds_alternative<fitness::Spea2>(fit)) {
            std::optional<FrontPartition> af = apply_fitness(*archive_members, space, fit, nullptr);
            apply_diversity(*archive_members, space, div, af ? &*af : nullptr);
        } else {
            apply_diversity(*archive_members, space, div, nullptr);
        }
    }
}

} // namespace emo
