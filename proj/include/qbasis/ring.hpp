#pragma once

// The coefficient ring R = K^Ω: functions from the atoms to an exact field,
// with pointwise arithmetic. Over a finite σ-algebra this is exactly
// L⁰(𝓕, K); every class has one simple-function representative.

#include <cstddef>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qbasis/atom_space.hpp"
#include "qbasis/errors.hpp"
#include "qbasis/field.hpp"
#include "qbasis/idempotent.hpp"

namespace qbasis {

template <ExactField F>
class RingElem {
public:
    using field_type = F;

    /// The zero function over `space`.
    explicit RingElem(AtomSpacePtr space) : space_(std::move(space)), values_(space_->size(), F{0}) {}

    /// Throws StructuralError if values.size() != n.
    RingElem(AtomSpacePtr space, std::vector<F> values) : space_(std::move(space)), values_(std::move(values)) {
        if (values_.size() != space_->size()) {
            throw StructuralError("ring element has " + std::to_string(values_.size()) +
                                  " values for a space of " + std::to_string(space_->size()) + " atoms");
        }
    }

    static RingElem zero(AtomSpacePtr space) { return RingElem(std::move(space)); }
    static RingElem one(AtomSpacePtr space) {
        const std::size_t n = space->size();
        return RingElem(std::move(space), std::vector<F>(n, F{1}));
    }
    /// Constant function with value c.
    static RingElem constant(AtomSpacePtr space, const F& c) {
        const std::size_t n = space->size();
        return RingElem(std::move(space), std::vector<F>(n, c));
    }

    const AtomSpacePtr& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<F>& values() const { return values_; }
    const F& operator[](std::size_t atom) const { return values_[atom]; }

    bool is_zero() const {
        for (const auto& v : values_) {
            if (!qbasis::is_zero(v)) return false;
        }
        return true;
    }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return same_space(a.space_, b.space_) && a.values_ == b.values_;
    }

    friend RingElem operator+(const RingElem& a, const RingElem& b) {
        return pointwise(a, b, "ring addition", [](const F& x, const F& y) { return x + y; });
    }
    friend RingElem operator-(const RingElem& a, const RingElem& b) {
        return pointwise(a, b, "ring subtraction", [](const F& x, const F& y) { return x - y; });
    }
    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        return pointwise(a, b, "ring multiplication", [](const F& x, const F& y) { return x * y; });
    }
    RingElem operator-() const {
        std::vector<F> out(values_.size());
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = -values_[k];
        return RingElem(space_, std::move(out));
    }

    friend std::ostream& operator<<(std::ostream& os, const RingElem& a) {
        os << '(';
        for (std::size_t k = 0; k < a.values_.size(); ++k) {
            if (k) os << ", ";
            if constexpr (std::is_same_v<F, Rational>) {
                os << format_rational(a.values_[k]);
            } else {
                os << a.values_[k];
            }
        }
        return os << ')';
    }

private:
    template <class Op>
    static RingElem pointwise(const RingElem& a, const RingElem& b, const char* what, Op op) {
        require_same_space(a.space_, b.space_, what);
        std::vector<F> out(a.values_.size());
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(a.values_[k], b.values_[k]);
        return RingElem(a.space_, std::move(out));
    }

    AtomSpacePtr space_;
    std::vector<F> values_;
};

template <ExactField F>
RingElem<F> ring_add(const RingElem<F>& a, const RingElem<F>& b) {
    return a + b;
}

template <ExactField F>
RingElem<F> ring_mul(const RingElem<F>& a, const RingElem<F>& b) {
    return a * b;
}

/// Least idempotent i with i·a = a: the indicator of {ω | a(ω) ≠ 0}.
template <ExactField F>
Idempotent support(const RingElem<F>& a) {
    std::vector<std::size_t> atoms;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!is_zero(a[k])) atoms.push_back(k);
    }
    return Idempotent(a.space(), atoms);
}

/// Generalized inverse: 1/a(ω) on the support, 0 elsewhere. Satisfies
/// a⁻¹·a = i_a and i_{a⁻¹} = i_a; defined for every a including 0.
template <ExactField F>
RingElem<F> gen_inverse(const RingElem<F>& a) {
    std::vector<F> out(a.size(), F{0});
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!is_zero(a[k])) out[k] = F{1} / a[k];
    }
    return RingElem<F>(a.space(), std::move(out));
}

/// An element of R is a unit iff it vanishes nowhere.
template <ExactField F>
bool is_unit(const RingElem<F>& a) {
    return support(a).is_unit();
}

/// The idempotent viewed as a 0/1-valued ring element.
template <ExactField F>
RingElem<F> to_ring(const Idempotent& i) {
    std::vector<F> out(i.space_size(), F{0});
    for (std::size_t k : i.atoms()) out[k] = F{1};
    return RingElem<F>(i.space(), std::move(out));
}

/// Inverse of to_ring. Throws PreconditionError if a² ≠ a.
template <ExactField F>
Idempotent to_idempotent(const RingElem<F>& a) {
    std::vector<std::size_t> atoms;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == F{1}) {
            atoms.push_back(k);
        } else if (!is_zero(a[k])) {
            throw PreconditionError("ring element is not idempotent at atom " + std::to_string(k));
        }
    }
    return Idempotent(a.space(), atoms);
}

/// i·a, i.e. a with every value outside i zeroed.
template <ExactField F>
RingElem<F> restrict(const Idempotent& i, const RingElem<F>& a) {
    require_same_space(i.space(), a.space(), "restrict");
    std::vector<F> out(a.size(), F{0});
    for (std::size_t k : i.atoms()) out[k] = a[k];
    return RingElem<F>(a.space(), std::move(out));
}

}  // namespace qbasis
