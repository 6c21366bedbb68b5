#include "emo/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace emo {

namespace {

std::vector<ObjectiveVector> dedupe(const std::vector<ObjectiveVector>& points) {
    std::vector<ObjectiveVector> out;
    for (const auto& p : points)
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    return out;
}

// Minimization-oriented copies, deduplicated and reduced to the
// nondominated subset.
std::vector<ObjectiveVector> reduced_min(const std::vector<ObjectiveVector>& points,
                                         const ObjectiveSpace& space) {
    std::vector<ObjectiveVector> min_pts;
    min_pts.reserve(points.size());
    for (const auto& p : points)
        min_pts.push_back(space.to_minimization(p));
    min_pts = dedupe(min_pts);
    ObjectiveSpace min_space = ObjectiveSpace::minimize(space.size());
    std::vector<ObjectiveVector> out;
    for (const auto& p : min_pts) {
        bool dominated = std::any_of(min_pts.begin(), min_pts.end(), [&](const auto& q) {
            return pareto_compare(q, p, min_space) == DominanceOutcome::Dominates;
        });
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

void check_reference(const std::vector<ObjectiveVector>& min_pts, const ObjectiveVector& min_ref) {
    for (const auto& p : min_pts)
        for (std::size_t i = 0; i < min_ref.size(); ++i)
            if (!(p[i] < min_ref[i]))
                throw std::invalid_argument(
                    "hypervolume reference point must be strictly worse than every front point");
}

double hv2d_exact(std::vector<ObjectiveVector> pts, const ObjectiveVector& ref) {
    // pts nondominated and deduplicated: ascending f1 means descending f2.
    std::sort(pts.begin(), pts.end());
    double hv = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double next_f1 = (i + 1 < pts.size()) ? pts[i + 1][0] : ref[0];
        hv += (next_f1 - pts[i][0]) * (ref[1] - pts[i][1]);
    }
    return hv;
}

double hv_monte_carlo(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref,
                      std::size_t samples, std::uint64_t seed) {
    if (pts.empty() || samples == 0)
        return 0.0;
    std::size_t n = ref.size();
    ObjectiveVector lo(n, std::numeric_limits<double>::infinity());
    for (const auto& p : pts)
        for (std::size_t i = 0; i < n; ++i)
            lo[i] = std::min(lo[i], p[i]);
    double box = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        box *= ref[i] - lo[i];
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::size_t hit = 0;
    ObjectiveVector s(n);
    for (std::size_t k = 0; k < samples; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            s[i] = lo[i] + uni(rng) * (ref[i] - lo[i]);
        bool covered = std::any_of(pts.begin(), pts.end(), [&](const auto& p) {
            for (std::size_t i = 0; i < n; ++i)
                if (p[i] > s[i])
                    return false;
            return true;
        });
        if (covered)
            ++hit;
    }
    return box * static_cast<double>(hit) / static_cast<double>(samples);
}

} // namespace

std::vector<ObjectiveVector> nondominated_subset(const std::vector<ObjectiveVector>& points,
                                                 const ObjectiveSpace& space) {
    std::vector<ObjectiveVector> uniq = dedupe(points);
    std::vector<ObjectiveVector> out;
    for (const auto& p : uniq) {
        bool dominated = std::any_of(uniq.begin(), uniq.end(), [&](const auto& q) {
            return pareto_compare(q, p, space) == DominanceOutcome::Dominates;
        });
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

HypervolumeResult hypervolume(const Front& front, const ObjectiveVector& ref,
                              std::size_t mc_samples, std::uint64_t seed) {
    front.space.check(ref);
    if (front.points.empty())
        return {0.0, false, 0};
    ObjectiveVector min_ref = front.space.to_minimization(ref);
    std::vector<ObjectiveVector> all_min;
    for (const auto& p : front.points)
        all_min.push_back(front.space.to_minimization(p));
    check_reference(all_min, min_ref);
    std::vector<ObjectiveVector> pts = reduced_min(front.points, front.space);
    if (front.space.size() == 2)
        return {hv2d_exact(std::move(pts), min_ref), false, 0};
    return {hv_monte_carlo(pts, min_ref, mc_samples, seed), true, mc_samples};
}

double hypervolume_monte_carlo(const Front& front, const ObjectiveVector& ref,
                               std::size_t samples, std::uint64_t seed) {
    front.space.check(ref);
    if (front.points.empty())
        return 0.0;
    ObjectiveVector min_ref = front.space.to_minimization(ref);
    std::vector<ObjectiveVector> all_min;
    for (const auto& p : front.points)
        all_min.push_back(front.space.to_minimization(p));
    check_reference(all_min, min_ref);
    return hv_monte_carlo(reduced_min(front.points, front.space), min_ref, samples, seed);
}

double binary_hypervolume(const Front& a, const Front& b, const ObjectiveVector& ref,
                          std::size_t mc_samples, std::uint64_t seed) {
    if (!(a.space == b.space))
        throw std::invalid_argument("binary_hypervolume: fronts live in different spaces");
    Front merged{a.points, a.space};
    merged.points.insert(merged.points.end(), b.points.begin(), b.points.end());
    double hv_union = hypervolume(merged, ref, mc_samples, seed).value;
    double hv_b = hypervolume(b, ref, mc_samples, seed).value;
    return hv_union - hv_b;
}

double epsilon_indicator(const Front& a, const Front& b, EpsilonMode mode) {
    if (a.points.empty() || b.points.empty())
        throw std::invalid_argument("epsilon_indicator: fronts must be nonempty");
    if (!(a.space == b.space))
        throw std::invalid_argument("epsilon_indicator: fronts live in different spaces");
    std::vector<ObjectiveVector> A = reduced_min(a.points, a.space);
    std::vector<ObjectiveVector> B = reduced_min(b.points, b.space);
    if (mode == EpsilonMode::Multiplicative) {
        for (const auto* set : {&A, &B})
            for (const auto& p : *set)
                for (double x : p)
                    if (!(x > 0.0))
                        throw std::invalid_argument(
                            "multiplicative epsilon requires strictly positive coordinates");
    }
    double worst_b = -std::numeric_limits<double>::infinity();
    for (const auto& pb : B) {
        double best_a = std::numeric_limits<double>::infinity();
        for (const auto& pa : A) {
            double eps = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < pa.size(); ++i) {
                double term = mode == EpsilonMode::Additive ? pa[i] - pb[i] : pa[i] / pb[i];
                eps = std::max(eps, term);
            }
            best_a = std::min(best_a, eps);
        }
        worst_b = std::max(worst_b, best_a);
    }
    return worst_b;
}

double contribution(const Front& a, const Front& b) {
    if (a.points.empty() || b.points.empty())
        throw std::invalid_argument("contribution: fronts must be nonempty");
    if (!(a.space == b.space))
        throw std::invalid_argument("contribution: fronts live in different spaces");
    std::vector<ObjectiveVector> uni = a.points;
    uni.insert(uni.end(), b.points.begin(), b.points.end());
    std::vector<ObjectiveVector> nd = nondominated_subset(uni, a.space);
    auto in = [](const std::vector<ObjectiveVector>& set, const ObjectiveVector& p) {
        return std::find(set.begin(), set.end(), p) != set.end();
    };
    double score = 0.0;
    for (const auto& p : nd) {
        bool in_a = in(a.points, p), in_b = in(b.points, p);
        if (in_a && in_b)
            score += 0.5;
        else if (in_a)
            score += 1.0;
    }
    return score / static_cast<double>(nd.size());
}

double binary_indicator_value(const BinaryIndicator& ind, const Front& a, const Front& b) {
    return std::visit(
        [&](const auto& i) -> double {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, AdditiveEpsilonIndicator>)
                return epsilon_indicator(a, b, EpsilonMode::Additive);
            else
                return binary_hypervolume(a, b, i.reference);
        },
        ind);
}

} // namespace emo
