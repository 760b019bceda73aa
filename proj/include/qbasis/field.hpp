#pragma once

// Exact scalar fields used as K in the ring K^Ω.
//
// Anything satisfying ExactField can be used: the algebra only needs exact
// +, -, *, /, negation and equality. Zero is F{0}, one is F{1}.

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace qbasis {

template <class F>
concept ExactField = std::regular<F> && std::constructible_from<F, int> &&
                     requires(const F& a, const F& b) {
                         { a + b } -> std::convertible_to<F>;
                         { a - b } -> std::convertible_to<F>;
                         { a * b } -> std::convertible_to<F>;
                         { a / b } -> std::convertible_to<F>;
                         { -a } -> std::convertible_to<F>;
                     };

template <ExactField F>
inline bool is_zero(const F& a) {
    return a == F{0};
}

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p" or "p/q" (optional leading '-', no whitespace, no decimals).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

/// Gaussian rationals ℚ(i): exact stand-in for complex scalars.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im = Rational{0}) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    // Division by zero is undefined, as in any field.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const Rational d = b.norm();
        const GaussianRational num = a * b.conj();
        return {num.re_ / d, num.im_ / d};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << '(' << format_rational(z.re_) << ',' << format_rational(z.im_) << ')';
    }

private:
    Rational re_{0};
    Rational im_{0};
};

static_assert(ExactField<Rational>);
static_assert(ExactField<GaussianRational>);

}  // namespace qbasis
