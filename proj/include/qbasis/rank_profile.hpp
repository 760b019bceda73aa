#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "qbasis/idempotent.hpp"

namespace qbasis {

/// Partition of e into strata i_0, i_1, ..., i_n, where the module is free of
/// rank j over i_j·R.
struct RankProfile {
    std::vector<Idempotent> strata;

    std::size_t max_rank() const { return strata.empty() ? 0 : strata.size() - 1; }

    /// The j with atom ∈ strata[j].
    std::size_t rank_at(std::size_t atom) const {
        for (std::size_t j = 0; j < strata.size(); ++j) {
            if (strata[j].contains(atom)) return j;
        }
        return 0;
    }

    friend bool operator==(const RankProfile&, const RankProfile&) = default;

    friend std::ostream& operator<<(std::ostream& os, const RankProfile& p) {
        os << '[';
        for (std::size_t j = 0; j < p.strata.size(); ++j) os << (j ? ", " : "") << p.strata[j];
        return os << ']';
    }
};

/// Groups atoms by rank: stratum j = {ω | ranks[ω] = j}, for j up to the
/// largest rank seen.
inline RankProfile profile_from_ranks(const AtomSpacePtr& space, const std::vector<std::size_t>& ranks) {
    std::size_t top = 0;
    for (std::size_t r : ranks) top = r > top ? r : top;
    std::vector<std::vector<std::size_t>> buckets(top + 1);
    for (std::size_t atom = 0; atom < ranks.size(); ++atom) buckets[ranks[atom]].push_back(atom);
    RankProfile out;
    out.strata.reserve(buckets.size());
    for (const auto& b : buckets) out.strata.emplace_back(space, b);
    return out;
}

}  // namespace qbasis
