#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace emo {

/// A point in objective space, one coordinate per objective.
using ObjectiveVector = std::vector<double>;

enum class Sense { Minimize, Maximize };

/// Number of objectives and the optimization sense of each one; the
/// contract every objective vector is interpreted against.
class ObjectiveSpace {
public:
    explicit ObjectiveSpace(std::vector<Sense> senses);

    static ObjectiveSpace minimize(std::size_t n_objectives);

    std::size_t size() const noexcept { return senses_.size(); }
    Sense sense(std::size_t i) const { return senses_[i]; }
    const std::vector<Sense>& senses() const noexcept { return senses_; }

    /// Coordinate i of v mapped so that smaller is always better.
    double key(const ObjectiveVector& v, std::size_t i) const {
        return senses_[i] == Sense::Minimize ? v[i] : -v[i];
    }

    /// Whole vector mapped to minimization orientation. The stored vector
    /// is never mutated; all dominance logic works on this view.
    ObjectiveVector to_minimization(const ObjectiveVector& v) const;

    /// Throws std::invalid_argument on dimension mismatch or non-finite entries.
    void check(const ObjectiveVector& v) const;

    bool operator==(const ObjectiveSpace&) const = default;

private:
    std::vector<Sense> senses_;
};

enum class DominanceOutcome { Dominates, DominatedBy, Equivalent, Incomparable };

/// Outcome seen from the other side of the comparison.
DominanceOutcome reversed(DominanceOutcome o);

namespace rel {

struct Pareto {
    bool operator==(const Pareto&) const = default;
};
struct Weak {
    bool operator==(const Weak&) const = default;
};
struct Strict {
    bool operator==(const Strict&) const = default;
};

/// Additive epsilon dominance with a per-objective margin, all entries > 0.
struct Epsilon {
    std::vector<double> margin;

    static Epsilon uniform(double eps, std::size_t n) {
        return Epsilon{std::vector<double>(n, eps)};
    }
    bool operator==(const Epsilon&) const = default;
};

/// Preference-point dominance: vectors componentwise no-worse or no-better
/// than the reference in every objective are flagged; flagged vectors
/// dominate unflagged ones, ties between flagged vectors fall back to
/// Pareto dominance.
struct G {
    ObjectiveVector reference;
    bool operator==(const G&) const = default;
};

} // namespace rel

using DominanceRelation = std::variant<rel::Pareto, rel::Weak, rel::Strict, rel::Epsilon, rel::G>;

DominanceOutcome pareto_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                                const ObjectiveSpace& space);

DominanceOutcome relation_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                                  const ObjectiveSpace& space, const DominanceRelation& rel);

enum class LexOrder { Less, Equal, Greater };

/// Compares objectives in the given priority order, each under its own
/// sense; the first strict difference decides. Less means a is preferred.
LexOrder lexicographic_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                               const ObjectiveSpace& space,
                               const std::vector<std::size_t>& priority);

} // namespace emo
