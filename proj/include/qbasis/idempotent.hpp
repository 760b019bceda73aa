#pragma once

// Idempotents of K^Ω, i.e. indicator functions of atom sets.
//
// They are stored extensionally as bitsets over the atoms, so the lattice
// operations a ∨ b = a + b - ab and a ∧ b = ab reduce to set union and
// intersection.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qbasis/atom_space.hpp"

namespace qbasis {

class Idempotent {
public:
    /// The zero idempotent over `space`.
    explicit Idempotent(AtomSpacePtr space);
    /// Throws StructuralError if an index is out of range.
    Idempotent(AtomSpacePtr space, std::span<const std::size_t> atoms);
    Idempotent(AtomSpacePtr space, std::initializer_list<std::size_t> atoms);

    static Idempotent zero(AtomSpacePtr space) { return Idempotent(std::move(space)); }
    /// The identity e.
    static Idempotent unit(AtomSpacePtr space);
    /// Decodes the bit pattern `mask` (bit k = atom k); handy for enumerating
    /// all 2^n idempotents of a small space.
    static Idempotent from_mask(AtomSpacePtr space, unsigned long long mask);

    const AtomSpacePtr& space() const { return space_; }
    std::size_t space_size() const { return bits_.size(); }

    bool contains(std::size_t atom) const { return atom < bits_.size() && bits_.test(atom); }
    bool is_zero() const { return bits_.none(); }
    bool is_unit() const { return bits_.all(); }
    std::size_t count() const { return bits_.count(); }

    /// Sorted atom indices.
    std::vector<std::size_t> atoms() const;

    /// Lattice order: a ⩽ b iff a ∧ b = a.
    bool is_below(const Idempotent& other) const;

    friend bool operator==(const Idempotent& a, const Idempotent& b);

    friend Idempotent join(const Idempotent& a, const Idempotent& b);
    friend Idempotent meet(const Idempotent& a, const Idempotent& b);
    friend Idempotent complement(const Idempotent& a);
    /// a - ab, the part of a outside b.
    friend Idempotent difference(const Idempotent& a, const Idempotent& b);

private:
    Idempotent(AtomSpacePtr space, boost::dynamic_bitset<> bits)
        : space_(std::move(space)), bits_(std::move(bits)) {}

    AtomSpacePtr space_;
    boost::dynamic_bitset<> bits_;
};

Idempotent join(const Idempotent& a, const Idempotent& b);
Idempotent meet(const Idempotent& a, const Idempotent& b);
Idempotent complement(const Idempotent& a);
Idempotent difference(const Idempotent& a, const Idempotent& b);

/// Supremum of a finite family; the empty family gives 0 over `space`.
Idempotent supremum(const AtomSpacePtr& space, std::span<const Idempotent> family);
/// Infimum of a finite family; the empty family gives e over `space`.
Idempotent infimum(const AtomSpacePtr& space, std::span<const Idempotent> family);

/// True iff the family is pairwise disjoint and joins to e.
bool is_partition_of_unity(const AtomSpacePtr& space, std::span<const Idempotent> family);

std::ostream& operator<<(std::ostream& os, const Idempotent& a);

}  // namespace qbasis
