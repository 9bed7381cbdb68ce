#ifndef MOTIVIC_DUALITY_HPP
#define MOTIVIC_DUALITY_HPP

#include <vector>

#include <motivic/variety.hpp>

namespace motivic {

/// The duality involution D_k of M_k. Every generator in the support must be
/// smooth, complete and connected; its coefficient p becomes
/// dual(p) * L^{-dim g}. Ring homomorphism and involution.
MotivicClass dual_k(const MotivicClass& c);

/// Simple-normal-crossings boundary data of a smooth connected open variety:
/// the ambient compactification and the level-wise boundary strata D^(l)
/// (normalizations of l-fold intersections), with levels[0] = ambient.
struct SNCData {
    ExprPtr interior;
    ExprPtr ambient;
    int dimension = 0;            // n = dim ambient = dim interior
    std::vector<ExprPtr> levels;  // indexed l = 0..n (trailing levels may be absent)

    /// Checks all structural invariants; DomainError on violation.
    void validate() const;
};

/// The Euler characteristic Sum_{l} (-L)^l [D^(l)] of the interior, read off
/// from the boundary data.
MotivicClass chi_ordinary(const SNCData& d, const RegistryPtr& reg);

/// chi(X) - chi(Y), the class of the pair (X, Y).
MotivicClass pair_chi(const SNCData& dx, const SNCData& dy,
                      const RegistryPtr& reg);

struct PrespaarResult {
    bool ok = false;
    MotivicClass chi_side;  // Sum (-L)^l [D^(l)]
    MotivicClass dual_side; // L^{dim X} * D_k([X])
    std::string diagnostic() const;
};

/// Checks chi_ordinary(d) == L^{dim X} * dual_k([interior]); reports both
/// sides on failure.
PrespaarResult verify_prespaar(const SNCData& d, const RegistryPtr& reg);

} // namespace motivic

#endif
