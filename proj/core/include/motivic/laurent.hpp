#ifndef MOTIVIC_LAURENT_HPP
#define MOTIVIC_LAURENT_HPP

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include <motivic/errors.hpp>

namespace motivic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in the Lefschetz symbol L with arbitrary-precision
/// integer coefficients: the coefficient ring Z[L, L^{-1}].
///
/// Stored sparsely as exponent -> coefficient; exponents may be negative.
/// Canonical form: no zero coefficient is ever stored, so operator== on the
/// term map decides equality.
class Laurent {
public:
    using TermMap = std::map<int, Int>;

    Laurent() = default;

    /// c * L^e
    static Laurent monomial(int exponent, Int coefficient);
    static Laurent constant(Int value) { return monomial(0, std::move(value)); }
    static Laurent lefschetz() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    /// Smallest/largest exponent with nonzero coefficient. Zero polynomial
    /// has neither; calling these on it is a DomainError.
    int min_exponent() const;
    int max_exponent() const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator*(const Laurent& rhs) const;
    Laurent& operator+=(const Laurent& rhs) { return *this = *this + rhs; }
    Laurent& operator-=(const Laurent& rhs) { return *this = *this - rhs; }
    Laurent& operator*=(const Laurent& rhs) { return *this = *this * rhs; }

    bool operator==(const Laurent& rhs) const = default;

    /// Nonnegative integer power.
    Laurent pow(int n) const;

    /// The involution L -> L^{-1}: every exponent is negated.
    Laurent dual() const;

    /// Exact evaluation at L = v. Substituting 0 into a polynomial with
    /// negative exponents is a pole and raises DomainError.
    Rational substitute(const Rational& v) const;

    /// Canonical text: ascending exponent order, e.g. "L^-2 + 3 + 2*L".
    std::string to_string() const;
    std::string to_latex() const;

private:
    TermMap terms_;

    void set(int exponent, Int coefficient);
};

inline Laurent operator*(const Int& c, const Laurent& p) {
    return Laurent::constant(c) * p;
}

} // namespace motivic

#endif
