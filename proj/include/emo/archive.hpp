#pragma once

#include <variant>

#include "emo/individual.hpp"
#include "emo/scores.hpp"

namespace emo {

namespace archive_kind {

struct Unbounded {
    bool operator==(const Unbounded&) const = default;
};

/// Keeps at most `capacity` mutually nondominated members, dropping the
/// lowest-diversity ones per the truncation strategy.
struct Bounded {
    std::size_t capacity = 100;
    diversity::DiversityStrategy truncation = diversity::Crowding{};
    bool operator==(const Bounded&) const = default;
};

/// Always holds min(capacity, candidates seen) members. Excess
/// nondominated members are removed by the lexicographic k-nearest-
/// neighbor rule; a shortfall is filled with the best dominated
/// candidates by SPEA2 fitness.
struct FixedSize {
    std::size_t capacity = 100;
    bool operator==(const FixedSize&) const = default;
};

} // namespace archive_kind

using ArchiveKind =
    std::variant<archive_kind::Unbounded, archive_kind::Bounded, archive_kind::FixedSize>;

class Archive {
public:
    Archive(ArchiveKind kind, DominanceRelation relation, ObjectiveSpace space);

    /// Offers candidates in order; returns how many were accepted.
    /// Candidates dominated by a member or equal to one in objective space
    /// are rejected; accepted candidates evict the members they dominate.
    std::size_t update(const Population& candidates);

    const Population& members() const noexcept { return members_; }
    Population& members() noexcept { return members_; }

    /// Objective-vector snapshot in insertion order.
    std::vector<ObjectiveVector> front() const;

    const ArchiveKind& kind() const noexcept { return kind_; }
    const DominanceRelation& relation() const noexcept { return relation_; }
    const ObjectiveSpace& space() const noexcept { return space_; }

private:
    std::size_t update_dominating(const Population& candidates);
    std::size_t update_fixed_size(const Population& candidates, std::size_t capacity);
    void truncate_bounded(const archive_kind::Bounded& spec);
    void truncate_knn_lexicographic(std::size_t capacity);

    ArchiveKind kind_;
    DominanceRelation relation_;
    ObjectiveSpace space_;
    Population members_;
};

} // namespace emo
