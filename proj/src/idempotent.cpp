#include "qbasis/idempotent.hpp"

#include <string>

#include "qbasis/errors.hpp"

namespace qbasis {
namespace {

std::size_t checked_size(const AtomSpacePtr& space) {
    if (!space) {
        throw StructuralError("idempotent requires an atom space");
    }
    return space->size();
}

}  // namespace

Idempotent::Idempotent(AtomSpacePtr space) : space_(std::move(space)), bits_(checked_size(space_)) {}

Idempotent::Idempotent(AtomSpacePtr space, std::span<const std::size_t> atoms) : Idempotent(std::move(space)) {
    for (std::size_t a : atoms) {
        if (a >= bits_.size()) {
            throw StructuralError("atom index " + std::to_string(a) + " out of range for n = " +
                                  std::to_string(bits_.size()));
        }
        bits_.set(a);
    }
}

Idempotent::Idempotent(AtomSpacePtr space, std::initializer_list<std::size_t> atoms)
    : Idempotent(std::move(space), std::span<const std::size_t>(atoms.begin(), atoms.size())) {}

Idempotent Idempotent::unit(AtomSpacePtr space) {
    Idempotent e(std::move(space));
    e.bits_.set();
    return e;
}

Idempotent Idempotent::from_mask(AtomSpacePtr space, unsigned long long mask) {
    Idempotent out(std::move(space));
    for (std::size_t k = 0; k < out.bits_.size() && k < 64; ++k) {
        if ((mask >> k) & 1ULL) {
            out.bits_.set(k);
        }
    }
    return out;
}

std::vector<std::size_t> Idempotent::atoms() const {
    std::vector<std::size_t> out;
    out.reserve(bits_.count());
    for (auto k = bits_.find_first(); k != boost::dynamic_bitset<>::npos; k = bits_.find_next(k)) {
        out.push_back(k);
    }
    return out;
}

bool Idempotent::is_below(const Idempotent& other) const {
    require_same_space(space_, other.space_, "idempotent order");
    return bits_.is_subset_of(other.bits_);
}

bool operator==(const Idempotent& a, const Idempotent& b) {
    return same_space(a.space_, b.space_) && a.bits_ == b.bits_;
}

Idempotent join(const Idempotent& a, const Idempotent& b) {
    require_same_space(a.space_, b.space_, "join");
    return Idempotent(a.space_, a.bits_ | b.bits_);
}

Idempotent meet(const Idempotent& a, const Idempotent& b) {
    require_same_space(a.space_, b.space_, "meet");
    return Idempotent(a.space_, a.bits_ & b.bits_);
}

Idempotent complement(const Idempotent& a) {
    return Idempotent(a.space_, ~a.bits_);
}

Idempotent difference(const Idempotent& a, const Idempotent& b) {
    require_same_space(a.space_, b.space_, "difference");
    return Idempotent(a.space_, a.bits_ - b.bits_);
}

Idempotent supremum(const AtomSpacePtr& space, std::span<const Idempotent> family) {
    Idempotent acc = Idempotent::zero(space);
    for (const auto& a : family) {
        acc = join(acc, a);
    }
    return acc;
}

Idempotent infimum(const AtomSpacePtr& space, std::span<const Idempotent> family) {
    Idempotent acc = Idempotent::unit(space);
    for (const auto& a : family) {
        acc = meet(acc, a);
    }
    return acc;
}

bool is_partition_of_unity(const AtomSpacePtr& space, std::span<const Idempotent> family) {
    Idempotent covered = Idempotent::zero(space);
    for (const auto& a : family) {
        if (!meet(covered, a).is_zero()) {
            return false;
        }
        covered = join(covered, a);
    }
    return covered.is_unit();
}

std::ostream& operator<<(std::ostream& os, const Idempotent& a) {
    os << '{';
    bool first = true;
    for (std::size_t k : a.atoms()) {
        os << (first ? "" : ",") << k;
        first = false;
    }
    return os << '}';
}

}  // namespace qbasis
