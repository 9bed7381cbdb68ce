#ifndef MOTIVIC_RELATIVE_HPP
#define MOTIVIC_RELATIVE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <motivic/duality.hpp>

namespace motivic {

/// A stratified base space: finitely many strata, each carrying the local
/// dimension of the base along it and its own motivic class. The empty base
/// (no strata) models M over the empty variety, which is zero.
struct Stratum {
    std::string id;
    int local_dim = 0;
    MotivicClass cls;
};

class Base {
public:
    Base(std::string name, std::vector<Stratum> strata);

    const std::string& name() const { return name_; }
    const std::vector<Stratum>& strata() const { return strata_; }
    bool has_stratum(const std::string& id) const;
    const Stratum& stratum(const std::string& id) const;

    /// Structural equality: same strata (ids, dims, classes); names ignored
    /// so independently constructed product bases compare equal.
    bool operator==(const Base& rhs) const;

private:
    std::string name_;
    std::vector<Stratum> strata_;
};

using BasePtr = std::shared_ptr<const Base>;

/// An element of the relative module M_S in the piecewise-trivial model:
/// one fiber class per stratum, absent entries meaning zero.
class RelClass {
public:
    RelClass(BasePtr base, std::map<std::string, MotivicClass> values);

    static RelClass zero(BasePtr base);
    /// The unit 1_S: the unit class over every stratum.
    static RelClass unit(BasePtr base, const RegistryPtr& reg);

    const BasePtr& base() const { return base_; }
    const std::map<std::string, MotivicClass>& values() const { return values_; }
    /// Fiber class at a stratum (zero if absent).
    MotivicClass at(const std::string& stratum_id) const;

    RelClass operator+(const RelClass& rhs) const;
    RelClass operator-(const RelClass& rhs) const;
    /// Scalar action of M_k.
    RelClass operator*(const MotivicClass& scalar) const;

    bool operator==(const RelClass& rhs) const;

    std::string to_string() const;

private:
    BasePtr base_;
    std::map<std::string, MotivicClass> values_; // normalized: no zero classes

    void require_same_base(const RelClass& rhs) const;
};

/// A stratified map with declared per-stratum fiber classes. Piecewise
/// triviality — stratum_class(s) = stratum_class(phi(s)) * rel_fiber(s) —
/// is checked at construction, as is the dimension relation when a smooth
/// relative dimension is declared.
class StratMap {
public:
    StratMap(std::string name, BasePtr source, BasePtr target,
             std::map<std::string, std::string> assignment,
             std::map<std::string, MotivicClass> rel_fiber,
             std::optional<int> smooth_rel_dim = std::nullopt);

    const std::string& name() const { return name_; }
    const BasePtr& source() const { return source_; }
    const BasePtr& target() const { return target_; }
    const std::string& image_of(const std::string& s) const;
    const MotivicClass& fiber_of(const std::string& s) const;
    std::optional<int> smooth_rel_dim() const { return smooth_rel_dim_; }

    static StratMap identity(const std::string& name, BasePtr base,
                             const RegistryPtr& reg);

private:
    std::string name_;
    BasePtr source_;
    BasePtr target_;
    std::map<std::string, std::string> assignment_;
    std::map<std::string, MotivicClass> rel_fiber_;
    std::optional<int> smooth_rel_dim_;
};

// The six operations.

/// f_!: sum the source fibers over each target stratum, weighted by the
/// relative fiber classes.
RelClass push_shriek(const StratMap& f, const RelClass& a);

/// f^*: restrict along the stratum assignment.
RelClass pull_star(const StratMap& f, const RelClass& b);

/// D_S: stratum-wise L^{-local_dim(s)} * dual_k(fiber).
RelClass rel_dual(const RelClass& a);

/// f_* = D_{S'} f_! D_S.
RelClass push_star(const StratMap& f, const RelClass& a);

/// f^! = D_S f^* D_{S'}.
RelClass pull_shriek(const StratMap& f, const RelClass& b);

/// Internal tensor product: stratum-wise multiplication.
RelClass tensor(const RelClass& a, const RelClass& b);

/// Internal Hom(A, B) = D_S(A tensor D_S B).
RelClass hom(const RelClass& a, const RelClass& b);

/// The dualizing element D_S(1_S).
RelClass dualizing_element(const BasePtr& base, const RegistryPtr& reg);

/// Pushforward to the point: sum of stratum_class(s) * a(s) over all strata.
MotivicClass total(const RelClass& a, const RegistryPtr& reg);

/// The product base S x T: strata are pairs, local dimensions add, stratum
/// classes multiply.
BasePtr product_base(const BasePtr& s, const BasePtr& t);

/// Exterior product into M_{S x T}.
RelClass box(const RelClass& a, const RelClass& b);

/// f x g between product bases.
StratMap product_map(const StratMap& f, const StratMap& g,
                     const RegistryPtr& reg);

/// The projection S x T -> S with its product source base.
StratMap projection_first(const BasePtr& s, const BasePtr& t,
                          const RegistryPtr& reg);

/// The fiber product of f: S -> S' and pi': T' -> S' in the model, with the
/// two projection legs.
struct PullbackSquare {
    BasePtr corner;  // T = S x_{S'} T'
    StratMap g;      // T -> T'
    StratMap pi;     // T -> S
};

PullbackSquare pullback_square(const StratMap& f, const StratMap& pi_prime,
                               const RegistryPtr& reg);

} // namespace motivic

#endif
