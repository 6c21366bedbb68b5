#pragma once

#include <functional>
#include <variant>

#include "emo/individual.hpp"

namespace emo {

namespace replace_scheme {

struct Generational {
    bool operator==(const Generational&) const = default;
};
struct OneShotElitist {
    bool operator==(const OneShotElitist&) const = default;
};
struct IterativeElitist {
    bool operator==(const IterativeElitist&) const = default;
};

} // namespace replace_scheme

using ReplacementScheme = std::variant<replace_scheme::Generational, replace_scheme::OneShotElitist,
                                       replace_scheme::IterativeElitist>;

/// Re-assigns fitness and diversity on a candidate set.
using Refit = std::function<void(Population&)>;

/// Generational: offspring survive unchanged (N must equal |offspring|).
/// OneShotElitist: the N ComparisonKey-best of parents ∪ offspring, scored
/// once by refit. IterativeElitist: repeatedly drop the worst of the union
/// and re-run refit on the survivors until N remain.
Population replace(const Population& parents, const Population& offspring,
                   const ReplacementScheme& scheme, std::size_t n, const Refit& refit);

} // namespace emo
