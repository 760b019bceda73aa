#pragma once

// Elements of the free module R^m over R = K^Ω.
//
// A ModVector stores m coordinates, each a RingElem. Evaluating every
// coordinate at one atom ω gives the fiber x(ω) ∈ K^m; most of the module
// theory reduces to linear algebra on fibers.

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qbasis/errors.hpp"
#include "qbasis/field.hpp"
#include "qbasis/idempotent.hpp"
#include "qbasis/ring.hpp"

namespace qbasis {

template <ExactField F>
using Fiber = std::vector<F>;

template <ExactField F>
class ModVector {
public:
    /// The zero vector θ of R^m.
    ModVector(AtomSpacePtr space, std::size_t ambient_rank)
        : space_(std::move(space)), coords_(ambient_rank, RingElem<F>(space_)) {
        if (ambient_rank == 0) {
            throw StructuralError("ambient rank must be at least 1");
        }
    }

    /// Throws StructuralError if coords is empty or spans several spaces.
    explicit ModVector(std::vector<RingElem<F>> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) {
            throw StructuralError("ambient rank must be at least 1");
        }
        space_ = coords_.front().space();
        for (const auto& c : coords_) {
            require_same_space(space_, c.space(), "module vector");
        }
    }

    /// Builds a vector from a coordinate-major table: values[c][ω].
    static ModVector from_table(AtomSpacePtr space, const std::vector<std::vector<F>>& values) {
        std::vector<RingElem<F>> coords;
        coords.reserve(values.size());
        for (const auto& row : values) coords.emplace_back(space, row);
        return ModVector(std::move(coords));
    }

    static ModVector zero(AtomSpacePtr space, std::size_t ambient_rank) {
        return ModVector(std::move(space), ambient_rank);
    }

    const AtomSpacePtr& space() const { return space_; }
    std::size_t ambient_rank() const { return coords_.size(); }
    std::size_t space_size() const { return space_->size(); }
    const std::vector<RingElem<F>>& coords() const { return coords_; }
    const RingElem<F>& coord(std::size_t c) const { return coords_[c]; }

    bool is_zero() const {
        for (const auto& c : coords_) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    /// The K^m fiber at `atom`. Throws StructuralError when out of range.
    Fiber<F> evaluate_at(std::size_t atom) const {
        if (atom >= space_size()) {
            throw StructuralError("atom index " + std::to_string(atom) + " out of range for n = " +
                                  std::to_string(space_size()));
        }
        Fiber<F> out;
        out.reserve(coords_.size());
        for (const auto& c : coords_) out.push_back(c[atom]);
        return out;
    }

    bool fiber_is_zero(std::size_t atom) const {
        for (const auto& c : coords_) {
            if (!qbasis::is_zero(c[atom])) return false;
        }
        return true;
    }

    friend bool operator==(const ModVector& a, const ModVector& b) {
        return same_space(a.space_, b.space_) && a.coords_ == b.coords_;
    }

    friend ModVector operator+(const ModVector& a, const ModVector& b) {
        require_compatible(a, b, "vector addition");
        std::vector<RingElem<F>> out;
        out.reserve(a.coords_.size());
        for (std::size_t c = 0; c < a.coords_.size(); ++c) out.push_back(a.coords_[c] + b.coords_[c]);
        return ModVector(std::move(out));
    }
    friend ModVector operator-(const ModVector& a, const ModVector& b) {
        require_compatible(a, b, "vector subtraction");
        std::vector<RingElem<F>> out;
        out.reserve(a.coords_.size());
        for (std::size_t c = 0; c < a.coords_.size(); ++c) out.push_back(a.coords_[c] - b.coords_[c]);
        return ModVector(std::move(out));
    }
    friend ModVector operator*(const RingElem<F>& a, const ModVector& x) {
        std::vector<RingElem<F>> out;
        out.reserve(x.coords_.size());
        for (const auto& c : x.coords_) out.push_back(a * c);
        return ModVector(std::move(out));
    }

    friend std::ostream& operator<<(std::ostream& os, const ModVector& x) {
        os << '[';
        for (std::size_t c = 0; c < x.coords_.size(); ++c) os << (c ? ", " : "") << x.coords_[c];
        return os << ']';
    }

    static void require_compatible(const ModVector& a, const ModVector& b, const char* what) {
        require_same_space(a.space_, b.space_, what);
        if (a.ambient_rank() != b.ambient_rank()) {
            throw StructuralError(std::string(what) + ": ambient ranks " + std::to_string(a.ambient_rank()) +
                                  " and " + std::to_string(b.ambient_rank()) + " differ");
        }
    }

private:
    AtomSpacePtr space_;
    std::vector<RingElem<F>> coords_;
};

template <ExactField F>
ModVector<F> vec_add(const ModVector<F>& x, const ModVector<F>& y) {
    return x + y;
}

template <ExactField F>
ModVector<F> scalar_mul(const RingElem<F>& a, const ModVector<F>& x) {
    return a * x;
}

/// i·x: every coordinate zeroed outside i.
template <ExactField F>
ModVector<F> restrict(const Idempotent& i, const ModVector<F>& x) {
    std::vector<RingElem<F>> out;
    out.reserve(x.ambient_rank());
    for (const auto& c : x.coords()) out.push_back(restrict(i, c));
    return ModVector<F>(std::move(out));
}

/// Least idempotent i with i·x = x: the atoms where the fiber is nonzero.
template <ExactField F>
Idempotent vec_support(const ModVector<F>& x) {
    std::vector<std::size_t> atoms;
    for (std::size_t k = 0; k < x.space_size(); ++k) {
        if (!x.fiber_is_zero(k)) atoms.push_back(k);
    }
    return Idempotent(x.space(), atoms);
}

template <ExactField F>
Fiber<F> evaluate_at(const ModVector<F>& x, std::size_t atom) {
    return x.evaluate_at(atom);
}

/// Glues parts[k] along partition[k]: the unique x with
/// partition[k]·x = partition[k]·parts[k] for every k.
/// Throws PreconditionError unless `partition` is a partition of e, and
/// StructuralError on length or shape mismatch.
template <ExactField F>
ModVector<F> concatenate(std::span<const Idempotent> partition, std::span<const ModVector<F>> parts) {
    if (partition.size() != parts.size()) {
        throw StructuralError("concatenation needs one part per partition member");
    }
    if (parts.empty()) {
        throw PreconditionError("empty family is not a partition of e");
    }
    const auto& space = parts.front().space();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        ModVector<F>::require_compatible(parts.front(), parts[k], "concatenate");
        require_same_space(space, partition[k].space(), "concatenate");
    }
    if (!is_partition_of_unity(space, partition)) {
        throw PreconditionError("concatenation requires a partition of e");
    }
    const std::size_t m = parts.front().ambient_rank();
    std::vector<std::vector<F>> table(m, std::vector<F>(space->size(), F{0}));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (std::size_t atom : partition[k].atoms()) {
            for (std::size_t c = 0; c < m; ++c) table[c][atom] = parts[k].coord(c)[atom];
        }
    }
    return ModVector<F>::from_table(space, table);
}

/// An ordered list of generators of a submodule of R^m. Zeros and repeats
/// are allowed; the empty list generates {θ}.
template <ExactField F>
class GeneratorSet {
public:
    GeneratorSet(AtomSpacePtr space, std::size_t ambient_rank, std::vector<ModVector<F>> gens = {})
        : space_(std::move(space)), ambient_rank_(ambient_rank), gens_(std::move(gens)) {
        if (ambient_rank_ == 0) {
            throw StructuralError("ambient rank must be at least 1");
        }
        for (std::size_t k = 0; k < gens_.size(); ++k) check(gens_[k], k);
    }

    const AtomSpacePtr& space() const { return space_; }
    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const std::vector<ModVector<F>>& gens() const { return gens_; }
    const ModVector<F>& operator[](std::size_t k) const { return gens_[k]; }

    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

    /// Column k of the returned list is generator k's fiber at `atom`.
    std::vector<Fiber<F>> fibers_at(std::size_t atom) const {
        std::vector<Fiber<F>> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(g.evaluate_at(atom));
        return out;
    }

    /// Throws StructuralError if x does not live in this set's R^m.
    void check(const ModVector<F>& x, std::size_t index = static_cast<std::size_t>(-1)) const {
        const std::string who = index == static_cast<std::size_t>(-1) ? "vector" : "generator " + std::to_string(index);
        if (!same_space(space_, x.space())) {
            throw StructuralError(who + " belongs to a different atom space");
        }
        if (x.ambient_rank() != ambient_rank_) {
            throw StructuralError(who + " has ambient rank " + std::to_string(x.ambient_rank()) + ", expected " +
                                  std::to_string(ambient_rank_));
        }
    }

private:
    AtomSpacePtr space_;
    std::size_t ambient_rank_;
    std::vector<ModVector<F>> gens_;
};

}  // namespace qbasis
