#include <cctype>
#include <stdexcept>
#include <string>

#include "qbasis/field.hpp"

namespace qbasis {
namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }
    using Int = boost::multiprecision::mpz_int;
    const Int p{std::string(num)};
    const Int q{std::string(den)};
    if (q == 0) {
        throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational{p, q};
}

std::string format_rational(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace qbasis
