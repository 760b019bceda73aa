#pragma once

// Quasi-bases of finitely generated submodules of (K^Ω)^m.
//
// A quasi-basis x_1..x_n spans the module, has nonincreasing supports
// i_{x_1} ⩾ ... ⩾ i_{x_n}, and Σ a_j x_j = θ forces a_j·i_{x_j} = 0. Over
// K^Ω the last clause is equivalent to: at every atom ω, the nonzero fibers
// x_j(ω) are linearly independent.
//
// construct() follows the inductive existence argument literally: scan the
// generators in order, skip members of the current span, and merge each new
// generator z through the cascade
//
//     i_0 = j0 = separation idempotent of z against the current span
//     i_q = i_{q-1} ∧ i_{x_q},   x_q += (i_{q-1} - i_q)·z
//
// stopping at the first i_q = 0, and appending i_n·z when the cascade runs
// past the last element with i_n ≠ 0.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbasis/errors.hpp"
#include "qbasis/fiber_solver.hpp"
#include "qbasis/idempotent.hpp"
#include "qbasis/module.hpp"
#include "qbasis/rank_profile.hpp"
#include "qbasis/ring.hpp"
#include "qbasis/stratification.hpp"

namespace qbasis {

template <ExactField F>
class QuasiBasis {
public:
    /// The empty quasi-basis, spanning {θ}.
    QuasiBasis(AtomSpacePtr space, std::size_t ambient_rank)
        : space_(std::move(space)), ambient_rank_(ambient_rank) {}

    /// Wraps a candidate list; supports are computed, nothing is verified.
    QuasiBasis(AtomSpacePtr space, std::size_t ambient_rank, std::vector<ModVector<F>> elements)
        : QuasiBasis(std::move(space), ambient_rank) {
        for (auto& x : elements) push_back(std::move(x));
    }

    const AtomSpacePtr& space() const { return space_; }
    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    const std::vector<ModVector<F>>& elements() const { return elements_; }
    const std::vector<Idempotent>& supports() const { return supports_; }
    const ModVector<F>& operator[](std::size_t j) const { return elements_[j]; }

    void push_back(ModVector<F> x) {
        require_same_space(space_, x.space(), "quasi-basis element");
        if (x.ambient_rank() != ambient_rank_) {
            throw StructuralError("quasi-basis element has ambient rank " + std::to_string(x.ambient_rank()) +
                                  ", expected " + std::to_string(ambient_rank_));
        }
        supports_.push_back(vec_support(x));
        elements_.push_back(std::move(x));
    }

    void replace(std::size_t j, ModVector<F> x) {
        supports_[j] = vec_support(x);
        elements_[j] = std::move(x);
    }

private:
    AtomSpacePtr space_;
    std::size_t ambient_rank_;
    std::vector<ModVector<F>> elements_;
    std::vector<Idempotent> supports_;
};

struct Counterexample {
    enum class Clause { Span, Chain, Independence };
    Clause clause;
    std::size_t atom;
    std::string detail;
};

inline const char* clause_name(Counterexample::Clause c) {
    switch (c) {
        case Counterexample::Clause::Span: return "span";
        case Counterexample::Clause::Chain: return "chain";
        case Counterexample::Clause::Independence: return "independence";
    }
    return "?";
}

struct VerificationReport {
    bool span_ok = true;
    bool chain_ok = true;
    bool independent_ok = true;
    /// The first failure found, checking span, then chain, then independence.
    std::optional<Counterexample> counterexample;

    bool ok() const { return span_ok && chain_ok && independent_ok; }
};

namespace detail {

/// First atom where the nonzero fibers of `elements` are linearly dependent.
template <ExactField F>
std::optional<std::size_t> first_dependent_atom(std::span<const ModVector<F>> elements, std::size_t n) {
    std::vector<Fiber<F>> cols;
    for (std::size_t atom = 0; atom < n; ++atom) {
        cols.clear();
        for (const auto& x : elements) {
            if (!x.fiber_is_zero(atom)) cols.push_back(x.evaluate_at(atom));
        }
        if (cols.empty()) continue;
        if (fiber_rank<F>(cols, cols.front().size()) != cols.size()) return atom;
    }
    return std::nullopt;
}

/// First j with supports[j+1] ⩽̸ supports[j], as (j, offending atom).
inline std::optional<std::pair<std::size_t, std::size_t>> first_chain_break(const std::vector<Idempotent>& supports) {
    for (std::size_t j = 0; j + 1 < supports.size(); ++j) {
        const Idempotent extra = difference(supports[j + 1], supports[j]);
        if (!extra.is_zero()) return std::pair{j, extra.atoms().front()};
    }
    return std::nullopt;
}

template <ExactField F>
QuasiBasis<F> cascade(const QuasiBasis<F>& current, const ModVector<F>& z, const Idempotent& separator) {
    QuasiBasis<F> next = current;
    Idempotent carry = separator;
    for (std::size_t q = 0; q < current.size(); ++q) {
        const Idempotent kept = meet(carry, current.supports()[q]);
        next.replace(q, current[q] + restrict(difference(carry, kept), z));
        carry = kept;
        if (carry.is_zero()) return next;
    }
    next.push_back(restrict(carry, z));
    return next;
}

}  // namespace detail

/// One inductive step: merges z into the quasi-basis. The result spans
/// span(current) + R·z and has at most one more element.
/// Throws PreconditionError if z already lies in span(current).
template <ExactField F>
QuasiBasis<F> insert_generator(const QuasiBasis<F>& current, const ModVector<F>& z) {
    const auto report = nonmembership_idempotent<F>(z, std::span<const ModVector<F>>(current.elements()));
    if (report.is_member()) {
        throw PreconditionError("already a member");
    }
    return detail::cascade(current, z, report.outside);
}

/// Quasi-basis of span(G), built by scanning G in input order.
template <ExactField F>
QuasiBasis<F> construct(const GeneratorSet<F>& g) {
    QuasiBasis<F> qb(g.space(), g.ambient_rank());
    for (const auto& z : g) {
        const auto report = nonmembership_idempotent<F>(z, std::span<const ModVector<F>>(qb.elements()));
        if (!report.is_member()) qb = detail::cascade(qb, z, report.outside);
    }
    return qb;
}

/// Checks the three quasi-basis clauses of `qb` relative to span(G).
/// Failures are reported, not thrown; a space or rank mismatch still throws
/// StructuralError.
template <ExactField F>
VerificationReport verify(const QuasiBasis<F>& qb, const GeneratorSet<F>& g) {
    require_same_space(qb.space(), g.space(), "verify");
    if (qb.ambient_rank() != g.ambient_rank()) {
        throw StructuralError("verify: candidate and generators have different ambient ranks");
    }
    using Clause = Counterexample::Clause;
    VerificationReport report;
    auto note = [&report](Clause c, std::size_t atom, std::string detail) {
        if (!report.counterexample) report.counterexample = Counterexample{c, atom, std::move(detail)};
    };

    const std::span<const ModVector<F>> basis(qb.elements());
    for (std::size_t k = 0; k < g.size() && report.span_ok; ++k) {
        const auto r = nonmembership_idempotent<F>(g[k], basis);
        if (!r.is_member()) {
            report.span_ok = false;
            note(Clause::Span, r.outside.atoms().front(), "generator " + std::to_string(k) + " is not in the candidate span");
        }
    }
    const std::span<const ModVector<F>> gens(g.gens());
    for (std::size_t j = 0; j < qb.size() && report.span_ok; ++j) {
        const auto r = nonmembership_idempotent<F>(qb[j], gens);
        if (!r.is_member()) {
            report.span_ok = false;
            note(Clause::Span, r.outside.atoms().front(), "element " + std::to_string(j) + " is not in the generator span");
        }
    }

    if (const auto brk = detail::first_chain_break(qb.supports())) {
        report.chain_ok = false;
        note(Clause::Chain, brk->second,
             "support of element " + std::to_string(brk->first + 1) + " exceeds support of element " +
                 std::to_string(brk->first));
    }

    if (const auto atom = detail::first_dependent_atom<F>(basis, g.space()->size())) {
        report.independent_ok = false;
        note(Clause::Independence, *atom, "nonzero fibers are linearly dependent");
    }
    return report;
}

/// Strata i_0 = e - i_{x_1}, i_j = i_{x_j} - i_{x_{j+1}}, i_n = i_{x_n}.
/// Throws PreconditionError unless qb has a nonincreasing support chain and
/// independent fibers.
template <ExactField F>
RankProfile rank_profile(const QuasiBasis<F>& qb) {
    if (detail::first_chain_break(qb.supports())) {
        throw PreconditionError("rank_profile: supports are not a nonincreasing chain");
    }
    if (detail::first_dependent_atom<F>(std::span<const ModVector<F>>(qb.elements()), qb.space()->size())) {
        throw PreconditionError("rank_profile: elements are not componentwise independent");
    }
    RankProfile out;
    const auto& s = qb.supports();
    Idempotent above = Idempotent::unit(qb.space());
    for (const auto& support : s) {
        out.strata.push_back(difference(above, support));
        above = support;
    }
    out.strata.push_back(above);
    return out;
}

/// The unique coefficients a_j with Σ a_j x_j = x and a_j·i_{x_j} = a_j.
/// Throws MembershipError (carrying the offending atoms) if x ∉ span(qb).
template <ExactField F>
std::vector<RingElem<F>> coordinates(const ModVector<F>& x, const QuasiBasis<F>& qb) {
    require_same_space(x.space(), qb.space(), "coordinates");
    if (x.ambient_rank() != qb.ambient_rank()) {
        throw StructuralError("coordinates: vector and quasi-basis have different ambient ranks");
    }
    auto coeffs = solve_on_stratum<F>(x, std::span<const ModVector<F>>(qb.elements()), Idempotent::unit(x.space()));
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = restrict(qb.supports()[j], coeffs[j]);
    return coeffs;
}

}  // namespace qbasis
