#pragma once

#include <variant>

#include "emo/individual.hpp"

namespace emo {

namespace select_scheme {

struct Random {
    bool operator==(const Random&) const = default;
};
struct DeterministicTournament {
    int m = 2; // tournament size, >= 2
    bool operator==(const DeterministicTournament&) const = default;
};
struct StochasticBinaryTournament {
    double p = 1.0; // probability the better one wins, in [0.5, 1]
    bool operator==(const StochasticBinaryTournament&) const = default;
};

using Basic = std::variant<Random, DeterministicTournament, StochasticBinaryTournament>;

/// Draws from the archive with probability p_archive (falling back to the
/// population when the archive is empty), otherwise from the population.
/// Nesting depth is 1 by construction: the sub-schemes are basic.
struct Elitist {
    double p_archive = 1.0;
    Basic archive_scheme = DeterministicTournament{2};
    Basic population_scheme = DeterministicTournament{2};
    bool operator==(const Elitist&) const = default;
};

} // namespace select_scheme

using SelectionScheme = std::variant<select_scheme::Random, select_scheme::DeterministicTournament,
                                     select_scheme::StochasticBinaryTournament,
                                     select_scheme::Elitist>;

/// Selects one parent. `archive_members` may be null unless the scheme is
/// Elitist. Tournament sampling is with replacement.
const Individual& select(const Population& pop, const Population* archive_members,
                         const SelectionScheme& scheme, Rng& rng);

} // namespace emo
