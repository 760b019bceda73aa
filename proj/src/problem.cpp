#include "qbasis/io/problem.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qbasis::io {
namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::size_t parse_count(const json& value, const char* key, std::size_t minimum) {
    if (!value.is_number_integer() || value.get<long long>() < static_cast<long long>(minimum)) {
        throw InputError(std::string("field \"") + key + "\" must be an integer >= " + std::to_string(minimum));
    }
    return value.get<std::size_t>();
}

Rational parse_entry(const json& value, const std::string& where) {
    if (!value.is_string()) {
        throw InputError(where + ": rationals must be strings \"p\" or \"p/q\"");
    }
    try {
        return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace

Vector parse_vector(const json& table, const AtomSpacePtr& space, std::size_t ambient_rank, const std::string& where) {
    if (!table.is_array()) {
        throw InputError(where + ": expected an array of " + std::to_string(ambient_rank) + " coordinate rows");
    }
    if (table.size() != ambient_rank) {
        throw InputError(where + ": has " + std::to_string(table.size()) + " coordinate rows, expected " +
                         std::to_string(ambient_rank));
    }
    const std::size_t n = space->size();
    std::vector<std::vector<Rational>> values(ambient_rank);
    for (std::size_t c = 0; c < ambient_rank; ++c) {
        const json& row = table[c];
        const std::string row_where = where + "[" + std::to_string(c) + "]";
        if (!row.is_array() || row.size() != n) {
            throw InputError(row_where + ": row length " + (row.is_array() ? std::to_string(row.size()) : "?") +
                             " does not match omega_size " + std::to_string(n));
        }
        values[c].reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            values[c].push_back(parse_entry(row[k], row_where + "[" + std::to_string(k) + "]"));
        }
    }
    return Vector::from_table(space, values);
}

std::vector<Vector> parse_vector_list(const json& list, const AtomSpacePtr& space, std::size_t ambient_rank,
                                      const std::string& where) {
    if (!list.is_array()) {
        throw InputError("field \"" + where + "\" must be an array");
    }
    std::vector<Vector> out;
    out.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
        out.push_back(parse_vector(list[k], space, ambient_rank, where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

Problem parse_problem(const json& doc) {
    if (!doc.is_object()) {
        throw InputError("problem file must be a JSON object");
    }
    const std::size_t n = parse_count(require_field(doc, "omega_size"), "omega_size", 1);
    const std::size_t m = parse_count(require_field(doc, "ambient_rank"), "ambient_rank", 1);

    std::optional<std::vector<Rational>> weights;
    if (auto it = doc.find("weights"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) {
            throw InputError("field \"weights\" must be an array");
        }
        weights.emplace();
        for (std::size_t k = 0; k < it->size(); ++k) {
            weights->push_back(parse_entry((*it)[k], "weights[" + std::to_string(k) + "]"));
        }
    }
    AtomSpacePtr space;
    try {
        space = make_space(n, std::move(weights));
    } catch (const PreconditionError& e) {
        throw InputError(std::string("weights: ") + e.what());
    }

    auto gens = parse_vector_list(require_field(doc, "generators"), space, m, "generators");
    Problem problem{space, m, GeneratorSet<Rational>(space, m, std::move(gens)), {}, std::nullopt};
    if (auto it = doc.find("queries"); it != doc.end()) {
        problem.queries = parse_vector_list(*it, space, m, "queries");
    }
    if (auto it = doc.find("basis"); it != doc.end()) {
        problem.basis = parse_vector_list(*it, space, m, "basis");
    }
    return problem;
}

Problem parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": invalid JSON: " + e.what());
    }
}

Problem load_problem(const std::filesystem::path& path) {
    const json doc = parse_json_file(path);
    try {
        return parse_problem(doc);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace qbasis::io
