#ifndef MOTIVIC_MOTIVIC_CLASS_HPP
#define MOTIVIC_MOTIVIC_CLASS_HPP

#include <map>
#include <string>

#include <motivic/registry.hpp>

namespace motivic {

/// Which realization measure to apply to an L-pure class.
enum class Measure { PointCount, Euler };

/// An element of the localized Grothendieck ring M_k: a finite formal sum of
/// registered generators with Laurent-polynomial coefficients. The unit is
/// 1 * `point`, and L-pure classes (support contained in {point}) are the
/// ones realization measures accept.
class MotivicClass {
public:
    using CoeffMap = GeneratorRegistry::CoeffMap;

    MotivicClass() = default;

    static MotivicClass zero(RegistryPtr reg);
    static MotivicClass unit(RegistryPtr reg);
    /// p * point (an L-pure class).
    static MotivicClass scalar(RegistryPtr reg, Laurent p);
    /// 1 * g.
    static MotivicClass generator(RegistryPtr reg, GeneratorId g);

    const RegistryPtr& registry() const { return reg_; }
    const CoeffMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// True when the support is empty or {point}.
    bool is_L_pure() const;
    /// The point coefficient of an L-pure class; DomainError otherwise.
    Laurent as_laurent() const;

    MotivicClass operator-() const;
    MotivicClass operator+(const MotivicClass& rhs) const;
    MotivicClass operator-(const MotivicClass& rhs) const;
    MotivicClass operator*(const MotivicClass& rhs) const;
    MotivicClass operator*(const Laurent& scalar) const;
    MotivicClass& operator+=(const MotivicClass& r) { return *this = *this + r; }
    MotivicClass& operator-=(const MotivicClass& r) { return *this = *this - r; }
    MotivicClass& operator*=(const MotivicClass& r) { return *this = *this * r; }

    bool operator==(const MotivicClass& rhs) const;

    /// PointCount substitutes L = q, Euler substitutes L = 1. Requires an
    /// L-pure class; otherwise DomainError naming the unresolved generators.
    Rational realize(Measure measure, const Rational& q = 0) const;

    /// Stable rendering: generators in registry order, coefficients in
    /// canonical Laurent form. A purely L-pure class renders as its bare
    /// Laurent polynomial.
    std::string to_string() const;
    std::string to_latex() const;

private:
    RegistryPtr reg_;
    CoeffMap coeffs_;

    MotivicClass(RegistryPtr reg, CoeffMap coeffs);
    void require_same_registry(const MotivicClass& rhs) const;
};

inline MotivicClass operator*(const Laurent& s, const MotivicClass& c) {
    return c * s;
}

} // namespace motivic

#endif
