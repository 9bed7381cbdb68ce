#ifndef MOTIVIC_REGISTRY_HPP
#define MOTIVIC_REGISTRY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <motivic/laurent.hpp>

namespace motivic {

using GeneratorId = std::uint32_t;

/// Metadata of one generator of the ring: a named symbol standing for the
/// class of a variety. Formal products keep the sorted multiset of their
/// atomic factors so products are associative and commutative by
/// construction.
struct GeneratorInfo {
    std::string name;
    int dimension = 0;
    bool smooth = false;
    bool complete = false;
    bool connected = false;
    std::vector<GeneratorId> factors; // sorted; {self} for atomic generators
};

/// Interning table of generators plus declared product reductions.
/// Mutation (interning) is serialized by an internal mutex; lookups of
/// already-interned generators are stable, so classes built on top are
/// freely shareable once construction is done.
class GeneratorRegistry {
public:
    // Raw coefficient map of a class, used to break the cycle with
    // MotivicClass for stored product reductions.
    using CoeffMap = std::map<GeneratorId, Laurent>;

    GeneratorRegistry();

    /// The distinguished unit generator `point`.
    GeneratorId point() const { return 0; }

    /// Interns a fresh atomic generator; reuses an existing one with the
    /// same name iff its metadata matches, otherwise DomainError.
    GeneratorId intern(const std::string& name, int dimension, bool smooth,
                       bool complete, bool connected);

    const GeneratorInfo& info(GeneratorId id) const;
    std::size_t size() const { return generators_.size(); }

    /// Declares that the product of generators a and b reduces to the given
    /// class instead of a formal product. Stored symmetrically.
    void declare_product(GeneratorId a, GeneratorId b, CoeffMap reduction);

    /// The coefficient map of the product of two generators: the declared
    /// reduction if one exists, otherwise 1 * (formal product generator).
    CoeffMap product(GeneratorId a, GeneratorId b);

private:
    std::vector<GeneratorInfo> generators_;
    std::map<std::string, GeneratorId> by_name_;
    std::map<std::vector<GeneratorId>, GeneratorId> by_factors_;
    std::map<std::pair<GeneratorId, GeneratorId>, CoeffMap> reductions_;
    mutable std::mutex mutex_;

    GeneratorId intern_product(std::vector<GeneratorId> factors);
};

using RegistryPtr = std::shared_ptr<GeneratorRegistry>;

inline RegistryPtr make_registry() {
    return std::make_shared<GeneratorRegistry>();
}

} // namespace motivic

#endif
