#pragma once

// Test-only oracles, kept independent of the library's elimination code.
// Ranks are computed from minors (Leibniz determinants), which is slow but
// shares nothing with row reduction. Only use on small fibers.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "qbasis/qbasis.hpp"

namespace qbasis::testing {

template <ExactField F>
F leibniz_det(const std::vector<std::vector<F>>& a) {
    const std::size_t k = a.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    F total{0};
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
        }
        F term{1};
        for (std::size_t i = 0; i < k && !is_zero(term); ++i) term = term * a[i][perm[i]];
        total = inversions % 2 ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// All k-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (pick[i]) s.push_back(i);
        }
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// Rank of the matrix whose columns are `cols` (each of length `rows`):
/// the largest k with a nonzero k×k minor.
template <ExactField F>
std::size_t minor_rank(const std::vector<std::vector<F>>& cols, std::size_t rows) {
    std::size_t rank = 0;
    for (std::size_t k = 1; k <= std::min(rows, cols.size()); ++k) {
        bool found = false;
        for (const auto& rs : subsets(rows, k)) {
            for (const auto& cs : subsets(cols.size(), k)) {
                std::vector<std::vector<F>> sub(k, std::vector<F>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = cols[cs[j]][rs[i]];
                }
                if (!is_zero(leibniz_det(sub))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;
        rank = k;
    }
    return rank;
}

template <ExactField F>
std::vector<std::vector<F>> fibers_at(std::span<const ModVector<F>> vs, std::size_t atom) {
    std::vector<std::vector<F>> out;
    for (const auto& v : vs) {
        std::vector<F> f;
        for (const auto& c : v.coords()) f.push_back(c[atom]);
        out.push_back(std::move(f));
    }
    return out;
}

/// x(ω) ∈ span{g(ω)} iff appending x(ω) does not raise the rank.
template <ExactField F>
bool fiber_member(std::span<const ModVector<F>> gens, const ModVector<F>& x, std::size_t atom) {
    auto cols = fibers_at<F>(gens, atom);
    const std::size_t m = x.ambient_rank();
    const std::size_t before = minor_rank<F>(cols, m);
    cols.push_back(fibers_at<F>(std::span<const ModVector<F>>(&x, 1), atom).front());
    return minor_rank<F>(cols, m) == before;
}

/// r(ω) by minors.
template <ExactField F>
std::vector<std::size_t> brute_fiber_ranks(const GeneratorSet<F>& g) {
    std::vector<std::size_t> out;
    for (std::size_t atom = 0; atom < g.space()->size(); ++atom) {
        out.push_back(minor_rank<F>(fibers_at<F>(std::span<const ModVector<F>>(g.gens()), atom), g.ambient_rank()));
    }
    return out;
}

}  // namespace qbasis::testing
