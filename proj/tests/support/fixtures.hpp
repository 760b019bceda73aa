#pragma once

#include <string>
#include <vector>

#include "qbasis/qbasis.hpp"

namespace qbasis::testing {

using Q = Rational;
using Vec = ModVector<Q>;
using Elem = RingElem<Q>;

inline Q q(const char* text) {
    return parse_rational(text);
}

inline Elem ring(const AtomSpacePtr& space, std::vector<Q> values) {
    return Elem(space, std::move(values));
}

inline Vec vec(const AtomSpacePtr& space, const std::vector<std::vector<Q>>& table) {
    return Vec::from_table(space, table);
}

/// Fixture F1: n = 3 atoms, m = 2, fiber ranks (2, 2, 1).
struct F1 {
    AtomSpacePtr space = make_space(3);
    Vec z1 = vec(space, {{1, 0, 0}, {0, 2, 0}});
    Vec z2 = vec(space, {{0, 1, 0}, {0, 1, 0}});
    Vec z3 = vec(space, {{1, 0, 1}, {1, 0, 0}});
    GeneratorSet<Q> gens{space, 2, {z1, z2, z3}};

    Idempotent idem(std::initializer_list<std::size_t> atoms) const { return Idempotent(space, atoms); }
    Idempotent e() const { return Idempotent::unit(space); }
    Idempotent zero() const { return Idempotent::zero(space); }
    Vec theta() const { return Vec::zero(space, 2); }
};

}  // namespace qbasis::testing
