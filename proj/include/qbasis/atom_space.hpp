#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qbasis/field.hpp"

namespace qbasis {

/// A finite sample space: n atoms of a finite σ-algebra, with optional
/// probability weights. The weights are metadata only; no algebraic
/// operation reads them.
class AtomSpace {
public:
    /// Throws PreconditionError if n == 0 or the weights are not n positive
    /// rationals summing to exactly 1.
    explicit AtomSpace(std::size_t n, std::optional<std::vector<Rational>> weights = std::nullopt);

    std::size_t size() const { return n_; }
    const std::optional<std::vector<Rational>>& weights() const { return weights_; }

    friend bool operator==(const AtomSpace&, const AtomSpace&) = default;

private:
    std::size_t n_;
    std::optional<std::vector<Rational>> weights_;
};

using AtomSpacePtr = std::shared_ptr<const AtomSpace>;

inline AtomSpacePtr make_space(std::size_t n, std::optional<std::vector<Rational>> weights = std::nullopt) {
    return std::make_shared<const AtomSpace>(n, std::move(weights));
}

inline bool same_space(const AtomSpacePtr& a, const AtomSpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Throws StructuralError naming `what` when the spaces differ.
void require_same_space(const AtomSpacePtr& a, const AtomSpacePtr& b, const char* what);

}  // namespace qbasis
