#include "qbasis/io/documents.hpp"

namespace qbasis::io {

Json encode_rational(const Rational& r) {
    return format_rational(r);
}

Json encode_ring(const RingElem<Rational>& a) {
    Json out = Json::array();
    for (const auto& v : a.values()) out.push_back(encode_rational(v));
    return out;
}

Json encode_vector(const Vector& x) {
    Json out = Json::array();
    for (const auto& c : x.coords()) out.push_back(encode_ring(c));
    return out;
}

Json encode_idempotent(const Idempotent& i) {
    Json out = Json::array();
    for (std::size_t k : i.atoms()) out.push_back(k);
    return out;
}

Json encode_profile(const RankProfile& p) {
    Json out = Json::array();
    for (const auto& s : p.strata) out.push_back(encode_idempotent(s));
    return out;
}

Json document_header(const std::string& command, const Problem& problem) {
    Json doc = Json::object();
    doc["command"] = command;
    doc["omega_size"] = problem.space->size();
    doc["ambient_rank"] = problem.ambient_rank;
    if (const auto& w = problem.space->weights()) {
        Json weights = Json::array();
        for (const auto& v : *w) weights.push_back(encode_rational(v));
        doc["weights"] = std::move(weights);
    }
    return doc;
}

Json compute_document(const Problem& problem, const QuasiBasis<Rational>& qb, const RankProfile& profile,
                      const std::optional<RankProfile>& oracle) {
    Json doc = document_header("compute", problem);
    doc["n"] = qb.size();
    Json elements = Json::array();
    for (const auto& x : qb.elements()) elements.push_back(encode_vector(x));
    doc["elements"] = std::move(elements);
    Json supports = Json::array();
    for (const auto& s : qb.supports()) supports.push_back(encode_idempotent(s));
    doc["supports"] = std::move(supports);
    doc["strata"] = encode_profile(profile);
    if (oracle) {
        doc["oracle_strata"] = encode_profile(*oracle);
        doc["oracle_match"] = (*oracle == profile);
    }
    return doc;
}

Json verify_document(const Problem& problem, const QuasiBasis<Rational>& candidate, const VerificationReport& report) {
    Json doc = document_header("verify", problem);
    doc["n"] = candidate.size();
    Json supports = Json::array();
    for (const auto& s : candidate.supports()) supports.push_back(encode_idempotent(s));
    doc["supports"] = std::move(supports);
    doc["span_ok"] = report.span_ok;
    doc["chain_ok"] = report.chain_ok;
    doc["independent_ok"] = report.independent_ok;
    doc["verified"] = report.ok();
    if (report.counterexample) {
        Json ce = Json::object();
        ce["clause"] = clause_name(report.counterexample->clause);
        ce["atom"] = report.counterexample->atom;
        ce["detail"] = report.counterexample->detail;
        doc["counterexample"] = std::move(ce);
    } else {
        doc["counterexample"] = nullptr;
    }
    return doc;
}

Json membership_entry(std::size_t query, const MembershipReport<Rational>& report) {
    Json entry = Json::object();
    entry["query"] = query;
    entry["member"] = report.is_member();
    entry["outside"] = encode_idempotent(report.outside);
    Json witnesses = Json::array();
    for (std::size_t atom = 0; atom < report.witnesses.size(); ++atom) {
        if (!report.witnesses[atom]) continue;
        Json w = Json::object();
        w["atom"] = atom;
        Json coeffs = Json::array();
        for (const auto& c : *report.witnesses[atom]) coeffs.push_back(encode_rational(c));
        w["coefficients"] = std::move(coeffs);
        witnesses.push_back(std::move(w));
    }
    entry["witnesses"] = std::move(witnesses);
    return entry;
}

Json coordinates_entry(std::size_t query, const std::vector<RingElem<Rational>>& coeffs) {
    Json entry = Json::object();
    entry["query"] = query;
    entry["representable"] = true;
    Json list = Json::array();
    for (const auto& a : coeffs) list.push_back(encode_ring(a));
    entry["coefficients"] = std::move(list);
    return entry;
}

Json coordinates_failure_entry(std::size_t query, const Idempotent& outside) {
    Json entry = Json::object();
    entry["query"] = query;
    entry["representable"] = false;
    entry["outside"] = encode_idempotent(outside);
    return entry;
}

std::string render(const Json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace qbasis::io
