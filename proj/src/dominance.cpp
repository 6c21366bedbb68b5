#include "emo/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace emo {

ObjectiveSpace::ObjectiveSpace(std::vector<Sense> senses) : senses_(std::move(senses)) {
    if (senses_.size() < 2)
        throw std::invalid_argument("ObjectiveSpace requires at least 2 objectives");
}

ObjectiveSpace ObjectiveSpace::minimize(std::size_t n_objectives) {
    return ObjectiveSpace(std::vector<Sense>(n_objectives, Sense::Minimize));
}

ObjectiveVector ObjectiveSpace::to_minimization(const ObjectiveVector& v) const {
    check(v);
    ObjectiveVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = key(v, i);
    return out;
}

void ObjectiveSpace::check(const ObjectiveVector& v) const {
    if (v.size() != senses_.size())
        throw std::invalid_argument("objective vector has " + std::to_string(v.size()) +
                                    " coordinates, space expects " +
                                    std::to_string(senses_.size()));
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument("objective vector contains a non-finite value");
}

DominanceOutcome reversed(DominanceOutcome o) {
    switch (o) {
    case DominanceOutcome::Dominates: return DominanceOutcome::DominatedBy;
    case DominanceOutcome::DominatedBy: return DominanceOutcome::Dominates;
    default: return o;
    }
}

namespace {

struct Tally {
    int a_better = 0;
    int b_better = 0;
};

Tally tally(const ObjectiveVector& a, const ObjectiveVector& b, const ObjectiveSpace& space) {
    space.check(a);
    space.check(b);
    Tally t;
    for (std::size_t i = 0; i < space.size(); ++i) {
        double ka = space.key(a, i), kb = space.key(b, i);
        if (ka < kb)
            ++t.a_better;
        else if (kb < ka)
            ++t.b_better;
    }
    return t;
}

DominanceOutcome outcome_from(const Tally& t) {
    if (t.a_better == 0 && t.b_better == 0)
        return DominanceOutcome::Equivalent;
    if (t.b_better == 0)
        return DominanceOutcome::Dominates;
    if (t.a_better == 0)
        return DominanceOutcome::DominatedBy;
    return DominanceOutcome::Incomparable;
}

DominanceOutcome strict_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                                const ObjectiveSpace& space) {
    Tally t = tally(a, b, space);
    std::size_t n = space.size();
    if (t.a_better == 0 && t.b_better == 0)
        return DominanceOutcome::Equivalent;
    if (static_cast<std::size_t>(t.a_better) == n)
        return DominanceOutcome::Dominates;
    if (static_cast<std::size_t>(t.b_better) == n)
        return DominanceOutcome::DominatedBy;
    return DominanceOutcome::Incomparable;
}

// a eps-dominates b iff a_i - eps_i <= b_i for all i, strictly for some i
// (minimization orientation).
bool eps_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                   const ObjectiveSpace& space, const std::vector<double>& eps) {
    bool strict = false;
    for (std::size_t i = 0; i < space.size(); ++i) {
        double lhs = space.key(a, i) - eps[i];
        double rhs = space.key(b, i);
        if (lhs > rhs)
            return false;
        if (lhs < rhs)
            strict = true;
    }
    return strict;
}

DominanceOutcome epsilon_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                                 const ObjectiveSpace& space, const rel::Epsilon& rel) {
    if (rel.margin.size() != space.size())
        throw std::invalid_argument("epsilon margin length does not match objective count");
    for (double e : rel.margin)
        if (!(e > 0.0))
            throw std::invalid_argument("epsilon margin entries must be positive");
    Tally t = tally(a, b, space);
    if (t.a_better == 0 && t.b_better == 0)
        return DominanceOutcome::Equivalent;
    // Forward direction first: inside the mutual epsilon band the relation
    // is not antisymmetric and the forward claim wins.
    if (eps_dominates(a, b, space, rel.margin))
        return DominanceOutcome::Dominates;
    if (eps_dominates(b, a, space, rel.margin))
        return DominanceOutcome::DominatedBy;
    return DominanceOutcome::Incomparable;
}

int g_flag(const ObjectiveVector& z, const ObjectiveVector& ref, const ObjectiveSpace& space) {
    bool all_le = true, all_ge = true;
    for (std::size_t i = 0; i < space.size(); ++i) {
        double kz = space.key(z, i), kr = space.key(ref, i);
        if (kz > kr)
            all_le = false;
        if (kz < kr)
            all_ge = false;
    }
    return (all_le || all_ge) ? 1 : 0;
}

DominanceOutcome g_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                           const ObjectiveSpace& space, const rel::G& rel) {
    space.check(rel.reference);
    Tally t = tally(a, b, space);
    if (t.a_better == 0 && t.b_better == 0)
        return DominanceOutcome::Equivalent;
    int fa = g_flag(a, rel.reference, space);
    int fb = g_flag(b, rel.reference, space);
    if (fa > fb)
        return DominanceOutcome::Dominates;
    if (fb > fa)
        return DominanceOutcome::DominatedBy;
    if (fa == 1)
        return outcome_from(t); // both flagged: Pareto fallback
    return DominanceOutcome::Incomparable;
}

} // namespace

DominanceOutcome pareto_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                                const ObjectiveSpace& space) {
    return outcome_from(tally(a, b, space));
}

DominanceOutcome relation_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                                  const ObjectiveSpace& space, const DominanceRelation& rel) {
    return std::visit(
        [&](const auto& r) -> DominanceOutcome {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, rel::Pareto>)
                return pareto_compare(a, b, space);
            else if constexpr (std::is_same_v<R, rel::Weak>)
                // Weak dominance drops the strictness requirement; equal
                // vectors are reported Equivalent, so the outcome table
                // coincides with Pareto's.
                return outcome_from(tally(a, b, space));
            else if constexpr (std::is_same_v<R, rel::Strict>)
                return strict_compare(a, b, space);
            else if constexpr (std::is_same_v<R, rel::Epsilon>)
                return epsilon_compare(a, b, space, r);
            else
                return g_compare(a, b, space, r);
        },
        rel);
}

LexOrder lexicographic_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                               const ObjectiveSpace& space,
                               const std::vector<std::size_t>& priority) {
    space.check(a);
    space.check(b);
    if (priority.size() != space.size())
        throw std::invalid_argument("priority must be a permutation of the objective indices");
    std::vector<bool> seen(space.size(), false);
    for (std::size_t i : priority) {
        if (i >= space.size() || seen[i])
            throw std::invalid_argument("priority must be a permutation of the objective indices");
        seen[i] = true;
    }
    for (std::size_t i : priority) {
        double ka = space.key(a, i), kb = space.key(b, i);
        if (ka < kb)
            return LexOrder::Less;
        if (kb < ka)
            return LexOrder::Greater;
    }
    return LexOrder::Equal;
}

} // namespace emo
