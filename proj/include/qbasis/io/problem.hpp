#pragma once

// Problem files: one JSON document describing a finitely generated submodule
// of (ℚ^Ω)^m plus optional query vectors and an optional candidate basis.
//
//   {
//     "omega_size": 3,
//     "weights": ["1/3", "1/3", "1/3"],          optional
//     "ambient_rank": 2,
//     "generators": [ [["1","0","0"], ["0","2","0"]], ... ],
//     "queries":    [ ... ],                      optional, same layout
//     "basis":      [ ... ]                       optional, same layout
//   }
//
// Each vector is an m×n table of rationals "p" or "p/q": outer index is the
// coordinate, inner index the atom.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbasis/errors.hpp"
#include "qbasis/field.hpp"
#include "qbasis/module.hpp"

namespace qbasis::io {

/// Malformed or inconsistent input; the message names the offending field.
class InputError : public Error {
public:
    using Error::Error;
};

using Vector = ModVector<Rational>;

struct Problem {
    AtomSpacePtr space;
    std::size_t ambient_rank = 0;
    GeneratorSet<Rational> generators;
    std::vector<Vector> queries;
    std::optional<std::vector<Vector>> basis;
};

Problem parse_problem(const nlohmann::json& doc);
Problem parse_problem_text(const std::string& text);
Problem load_problem(const std::filesystem::path& path);

/// Reads one vector in table layout; `where` prefixes diagnostics.
Vector parse_vector(const nlohmann::json& table, const AtomSpacePtr& space, std::size_t ambient_rank,
                    const std::string& where);

std::vector<Vector> parse_vector_list(const nlohmann::json& list, const AtomSpacePtr& space,
                                      std::size_t ambient_rank, const std::string& where);

nlohmann::json parse_json_file(const std::filesystem::path& path);

}  // namespace qbasis::io
