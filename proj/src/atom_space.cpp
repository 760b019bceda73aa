#include "qbasis/atom_space.hpp"

#include <string>

#include "qbasis/errors.hpp"

namespace qbasis {

AtomSpace::AtomSpace(std::size_t n, std::optional<std::vector<Rational>> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n_ == 0) {
        throw PreconditionError("atom space must have at least one atom");
    }
    if (!weights_) {
        return;
    }
    if (weights_->size() != n_) {
        throw PreconditionError("expected " + std::to_string(n_) + " weights, got " +
                                std::to_string(weights_->size()));
    }
    Rational total{0};
    for (std::size_t k = 0; k < n_; ++k) {
        if ((*weights_)[k] <= 0) {
            throw PreconditionError("weight of atom " + std::to_string(k) + " is not positive");
        }
        total += (*weights_)[k];
    }
    if (total != 1) {
        throw PreconditionError("weights sum to " + format_rational(total) + ", not 1");
    }
}

void require_same_space(const AtomSpacePtr& a, const AtomSpacePtr& b, const char* what) {
    if (!same_space(a, b)) {
        throw StructuralError(std::string(what) + ": operands belong to different atom spaces");
    }
}

}  // namespace qbasis
