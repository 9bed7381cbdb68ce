#include <motivic/registry.hpp>

#include <algorithm>
#include <sstream>

namespace motivic {

GeneratorRegistry::GeneratorRegistry() {
    GeneratorInfo pt;
    pt.name = "point";
    pt.dimension = 0;
    pt.smooth = pt.complete = pt.connected = true;
    pt.factors = {};
    generators_.push_back(std::move(pt));
    by_name_["point"] = 0;
}

GeneratorId GeneratorRegistry::intern(const std::string& name, int dimension,
                                      bool smooth, bool complete,
                                      bool connected) {
    if (dimension < 0)
        throw DomainError("generator dimension must be nonnegative: " + name);
    std::lock_guard lock(mutex_);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        const GeneratorInfo& g = generators_[it->second];
        if (g.dimension != dimension || g.smooth != smooth ||
            g.complete != complete || g.connected != connected)
            throw DomainError("generator '" + name +
                              "' already interned with different metadata");
        return it->second;
    }
    GeneratorId id = static_cast<GeneratorId>(generators_.size());
    GeneratorInfo g;
    g.name = name;
    g.dimension = dimension;
    g.smooth = smooth;
    g.complete = complete;
    g.connected = connected;
    g.factors = {id};
    generators_.push_back(std::move(g));
    by_name_[name] = id;
    return id;
}

const GeneratorInfo& GeneratorRegistry::info(GeneratorId id) const {
    if (id >= generators_.size())
        throw DomainError("unknown generator id");
    return generators_[id];
}

void GeneratorRegistry::declare_product(GeneratorId a, GeneratorId b,
                                        CoeffMap reduction) {
    std::lock_guard lock(mutex_);
    if (a > b)
        std::swap(a, b);
    reductions_[{a, b}] = std::move(reduction);
}

GeneratorId GeneratorRegistry::intern_product(std::vector<GeneratorId> factors) {
    // caller holds the mutex
    if (factors.empty())
        return point();
    if (factors.size() == 1)
        return factors[0];
    auto it = by_factors_.find(factors);
    if (it != by_factors_.end())
        return it->second;

    GeneratorInfo g;
    g.smooth = g.complete = g.connected = true;
    std::ostringstream name;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const GeneratorInfo& f = generators_[factors[i]];
        g.dimension += f.dimension;
        g.smooth = g.smooth && f.smooth;
        g.complete = g.complete && f.complete;
        g.connected = g.connected && f.connected;
        if (i)
            name << ".";
        name << f.name;
    }
    g.name = name.str();
    g.factors = factors;

    GeneratorId id = static_cast<GeneratorId>(generators_.size());
    generators_.push_back(std::move(g));
    by_factors_[std::move(factors)] = id;
    return id;
}

GeneratorRegistry::CoeffMap GeneratorRegistry::product(GeneratorId a,
                                                       GeneratorId b) {
    std::lock_guard lock(mutex_);
    if (a >= generators_.size() || b >= generators_.size())
        throw DomainError("unknown generator id");
    if (a == point())
        return {{b, Laurent::constant(1)}};
    if (b == point())
        return {{a, Laurent::constant(1)}};
    auto key = std::minmax(a, b);
    auto it = reductions_.find({key.first, key.second});
    if (it != reductions_.end())
        return it->second;

    std::vector<GeneratorId> factors = generators_[a].factors;
    const auto& fb = generators_[b].factors;
    factors.insert(factors.end(), fb.begin(), fb.end());
    std::sort(factors.begin(), factors.end());
    return {{intern_product(std::move(factors)), Laurent::constant(1)}};
}

} // namespace motivic
