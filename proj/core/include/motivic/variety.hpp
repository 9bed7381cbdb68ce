#ifndef MOTIVIC_VARIETY_HPP
#define MOTIVIC_VARIETY_HPP

#include <memory>
#include <string>
#include <vector>

#include <motivic/motivic_class.hpp>

namespace motivic {

enum class ExprKind {
    Empty,
    Point,
    Affine,       // A(n)
    Projective,   // P(n)
    Torus,        // T(n)
    Grassmannian, // Gr(k, n)
    Product,
    DisjointUnion,
    Complement, // X \ Y, Y asserted closed in X
    VecBundle,  // vb(base, r)
    ProjBundle, // pb(base, r), r >= 1
    BlowUp,     // bl(X; Y; d), Y asserted smooth closed of codimension d
    Symbolic,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node of the variety description language. Geometric
/// metadata (dimension, smooth/complete/connected flags) is computed
/// bottom-up at construction, and malformed nodes are rejected there.
/// Closedness and smoothness of user-supplied subvariety relationships are
/// asserted by the user, not verified.
class Expr {
public:
    static ExprPtr empty();
    static ExprPtr point();
    static ExprPtr affine(int n);
    static ExprPtr projective(int n);
    static ExprPtr torus(int n);
    static ExprPtr grassmannian(int k, int n);
    static ExprPtr product(ExprPtr a, ExprPtr b);
    static ExprPtr disjoint_union(ExprPtr a, ExprPtr b);
    static ExprPtr complement(ExprPtr x, ExprPtr y);
    static ExprPtr vec_bundle(ExprPtr base, int rank);
    static ExprPtr proj_bundle(ExprPtr base, int rank);
    static ExprPtr blow_up(ExprPtr x, ExprPtr center, int codim);
    static ExprPtr symbolic(std::string name, int dimension, bool smooth,
                            bool complete, bool connected);

    ExprKind kind() const { return kind_; }
    /// -1 for the empty variety.
    int dimension() const { return dimension_; }
    bool smooth() const { return smooth_; }
    bool complete() const { return complete_; }
    bool connected() const { return connected_; }

    const ExprPtr& left() const { return left_; }
    const ExprPtr& right() const { return right_; }
    /// n for A/P/T, k for Gr, rank for bundles, codim for BlowUp.
    int param() const { return param_; }
    /// n for Gr.
    int param2() const { return param2_; }
    const std::string& name() const { return name_; }

    bool operator==(const Expr& rhs) const;

    /// Surface-syntax rendering; reparses to a structurally equal AST.
    std::string render() const;

private:
    ExprKind kind_;
    int dimension_ = 0;
    bool smooth_ = true, complete_ = true, connected_ = true;
    ExprPtr left_, right_;
    int param_ = 0, param2_ = 0;
    std::string name_;

    explicit Expr(ExprKind kind) : kind_(kind) {}
};

/// Evaluates the motivic class of an expression by the blow-up calculus:
/// scissor relations for complements and unions, L^r and projective-bundle
/// factors for bundles, the fundamental blow-up relation, and the Gaussian
/// binomial for Grassmannians. Symbolic nodes intern their generator.
MotivicClass class_of(const Expr& e, const RegistryPtr& reg);
inline MotivicClass class_of(const ExprPtr& e, const RegistryPtr& reg) {
    return class_of(*e, reg);
}

/// The exceptional divisor of a BlowUp node: ProjBundle(center, d).
ExprPtr exceptional_divisor(const Expr& blow_up_node);

/// Gaussian binomial coefficient [n choose k]_L, the class of Gr(k, n).
Laurent gaussian_binomial(int k, int n);

} // namespace motivic

#endif
