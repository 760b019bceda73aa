#pragma once

// Separation idempotents for the two cases the construction needs:
// a vector against a finitely generated span, and a vector against a vector.
//
// For H = {x} and G = span(z_1..z_l), the separation idempotent is the set of
// atoms where the fiber x(ω) is outside span{z_j(ω)}. Off that set, per-atom
// witnesses glue (by concatenation) into ring coefficients.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbasis/errors.hpp"
#include "qbasis/fiber_solver.hpp"
#include "qbasis/idempotent.hpp"
#include "qbasis/module.hpp"
#include "qbasis/ring.hpp"

namespace qbasis {

/// Raised when a vector is required to lie in a span and does not.
/// `outside()` holds the atoms where membership fails.
class MembershipError : public PreconditionError {
public:
    MembershipError(const std::string& what, Idempotent outside)
        : PreconditionError(what), outside_(std::move(outside)) {}

    const Idempotent& outside() const { return outside_; }

private:
    Idempotent outside_;
};

template <ExactField F>
struct MembershipReport {
    /// Atoms where x is not in the fiber span.
    Idempotent outside;
    /// witnesses[ω] is set exactly for ω outside `outside`; it holds c with
    /// Σ c_j·z_j(ω) = x(ω).
    std::vector<std::optional<std::vector<F>>> witnesses;

    bool is_member() const { return outside.is_zero(); }
};

namespace detail {

template <ExactField F>
void require_compatible_all(const ModVector<F>& x, std::span<const ModVector<F>> gens, const char* what) {
    for (const auto& z : gens) ModVector<F>::require_compatible(x, z, what);
}

inline std::string atom_list(const Idempotent& i) {
    std::string s = "{";
    bool first = true;
    for (std::size_t k : i.atoms()) {
        s += (first ? "" : ",") + std::to_string(k);
        first = false;
    }
    return s + "}";
}

}  // namespace detail

template <ExactField F>
MembershipReport<F> nonmembership_idempotent(const ModVector<F>& x, std::span<const ModVector<F>> gens) {
    detail::require_compatible_all(x, gens, "nonmembership_idempotent");
    const std::size_t n = x.space_size();
    std::vector<std::size_t> outside_atoms;
    std::vector<std::optional<std::vector<F>>> witnesses(n);
    std::vector<Fiber<F>> columns(gens.size());
    for (std::size_t atom = 0; atom < n; ++atom) {
        for (std::size_t j = 0; j < gens.size(); ++j) columns[j] = gens[j].evaluate_at(atom);
        auto c = solve_fiber<F>(columns, x.evaluate_at(atom));
        if (c) {
            witnesses[atom] = std::move(c);
        } else {
            outside_atoms.push_back(atom);
        }
    }
    return {Idempotent(x.space(), outside_atoms), std::move(witnesses)};
}

template <ExactField F>
MembershipReport<F> nonmembership_idempotent(const ModVector<F>& x, const GeneratorSet<F>& g) {
    g.check(x);
    return nonmembership_idempotent<F>(x, std::span<const ModVector<F>>(g.gens()));
}

/// Least idempotent off which x and y agree; equals vec_support(x - y).
template <ExactField F>
Idempotent equality_stratifier(const ModVector<F>& x, const ModVector<F>& y) {
    return vec_support(x - y);
}

/// Ring coefficients c_1..c_l, supported in i, with i·Σ c_j z_j = i·x.
/// Throws MembershipError naming the atoms of i where x is outside the span.
template <ExactField F>
std::vector<RingElem<F>> solve_on_stratum(const ModVector<F>& x, std::span<const ModVector<F>> gens,
                                          const Idempotent& i) {
    require_same_space(x.space(), i.space(), "solve_on_stratum");
    const auto report = nonmembership_idempotent<F>(x, gens);
    const Idempotent bad = meet(i, report.outside);
    if (!bad.is_zero()) {
        throw MembershipError("vector is not in the span on atoms " + detail::atom_list(bad), bad);
    }
    const std::size_t n = x.space_size();
    std::vector<std::vector<F>> table(gens.size(), std::vector<F>(n, F{0}));
    for (std::size_t atom : i.atoms()) {
        const auto& w = *report.witnesses[atom];
        for (std::size_t j = 0; j < gens.size(); ++j) table[j][atom] = w[j];
    }
    std::vector<RingElem<F>> out;
    out.reserve(gens.size());
    for (auto& row : table) out.emplace_back(x.space(), std::move(row));
    return out;
}

template <ExactField F>
std::vector<RingElem<F>> solve_on_stratum(const ModVector<F>& x, const GeneratorSet<F>& g, const Idempotent& i) {
    g.check(x);
    return solve_on_stratum<F>(x, std::span<const ModVector<F>>(g.gens()), i);
}

/// Σ c_j·z_j.
template <ExactField F>
ModVector<F> linear_combination(std::span<const RingElem<F>> coeffs, std::span<const ModVector<F>> gens,
                                const AtomSpacePtr& space, std::size_t ambient_rank) {
    if (coeffs.size() != gens.size()) {
        throw StructuralError("linear combination needs one coefficient per vector");
    }
    ModVector<F> acc = ModVector<F>::zero(space, ambient_rank);
    for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + coeffs[j] * gens[j];
    return acc;
}

}  // namespace qbasis
