#pragma once

// Result documents written by the command-line front end. Keys are emitted
// in a fixed order and rationals in canonical form, so identical inputs give
// identical bytes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbasis/io/problem.hpp"
#include "qbasis/quasibasis.hpp"
#include "qbasis/stratification.hpp"

namespace qbasis::io {

using Json = nlohmann::ordered_json;

Json encode_rational(const Rational& r);
Json encode_ring(const RingElem<Rational>& a);
Json encode_vector(const Vector& x);
Json encode_idempotent(const Idempotent& i);
Json encode_profile(const RankProfile& p);

/// Problem metadata shared by every result document.
Json document_header(const std::string& command, const Problem& problem);

Json compute_document(const Problem& problem, const QuasiBasis<Rational>& qb, const RankProfile& profile,
                      const std::optional<RankProfile>& oracle);

Json verify_document(const Problem& problem, const QuasiBasis<Rational>& candidate, const VerificationReport& report);

Json membership_entry(std::size_t query, const MembershipReport<Rational>& report);

Json coordinates_entry(std::size_t query, const std::vector<RingElem<Rational>>& coeffs);
Json coordinates_failure_entry(std::size_t query, const Idempotent& outside);

/// Two-space indented text with a trailing newline.
std::string render(const Json& doc);

}  // namespace qbasis::io
