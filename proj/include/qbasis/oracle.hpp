#pragma once

// Componentwise ground truth for the rank profile of span(G).
//
// The rank of the fiber matrix is computed per atom with a row-echelon pass
// over the generators written as rows. This routine is deliberately separate
// from FiberEchelon, which drives the construction.

#include <cstddef>
#include <utility>
#include <vector>

#include "qbasis/field.hpp"
#include "qbasis/module.hpp"
#include "qbasis/rank_profile.hpp"

namespace qbasis {

/// Rank over K of the given vectors (all of the same length).
template <ExactField F>
std::size_t row_rank(std::vector<std::vector<F>> rows) {
    if (rows.empty()) return 0;
    const std::size_t width = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && is_zero(rows[p][col])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (is_zero(rows[r][col])) continue;
            const F factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < width; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// r(ω) for every atom ω.
template <ExactField F>
std::vector<std::size_t> oracle_fiber_ranks(const GeneratorSet<F>& g) {
    const std::size_t n = g.space()->size();
    std::vector<std::size_t> ranks(n, 0);
    for (std::size_t atom = 0; atom < n; ++atom) {
        std::vector<std::vector<F>> rows;
        rows.reserve(g.size());
        for (const auto& z : g) {
            std::vector<F> row;
            row.reserve(g.ambient_rank());
            for (const auto& c : z.coords()) row.push_back(c[atom]);
            rows.push_back(std::move(row));
        }
        ranks[atom] = row_rank<F>(std::move(rows));
    }
    return ranks;
}

template <ExactField F>
RankProfile oracle_rank_profile(const GeneratorSet<F>& g) {
    return profile_from_ranks(g.space(), oracle_fiber_ranks(g));
}

}  // namespace qbasis
