#include <motivic/duality.hpp>

#include <sstream>

namespace motivic {

MotivicClass dual_k(const MotivicClass& c) {
    const RegistryPtr& reg = c.registry();
    std::vector<std::string> offending;
    for (const auto& [g, p] : c.coefficients()) {
        const GeneratorInfo& info = reg->info(g);
        if (!info.smooth || !info.complete || !info.connected)
            offending.push_back(info.name);
    }
    if (!offending.empty()) {
        std::ostringstream msg;
        msg << "not dualizable: generator(s) lacking smooth/complete/connected:";
        for (const auto& n : offending)
            msg << " " << n;
        throw DomainError(msg.str());
    }
    MotivicClass result = MotivicClass::zero(reg);
    for (const auto& [g, p] : c.coefficients()) {
        const int dim = reg->info(g).dimension;
        result += MotivicClass::generator(reg, g) *
                  (p.dual() * Laurent::monomial(-dim, 1));
    }
    return result;
}

void SNCData::validate() const {
    if (!interior || !ambient)
        throw DomainError("SNC data: interior and ambient are required");
    if (levels.empty())
        throw DomainError("SNC data: levels must contain at least D^(0)");
    if (!(*levels[0] == *ambient))
        throw DomainError("SNC data: levels[0] must be the ambient expression");
    if (!ambient->smooth() || !ambient->complete())
        throw DomainError("SNC data: ambient must be smooth and complete");
    if (ambient->dimension() != dimension)
        throw DomainError("SNC data: ambient dimension " +
                          std::to_string(ambient->dimension()) +
                          " does not match declared dimension " +
                          std::to_string(dimension));
    if (!interior->smooth() || !interior->connected())
        throw DomainError("SNC data: interior must be smooth and connected");
    if (interior->dimension() != dimension)
        throw DomainError("SNC data: interior dimension " +
                          std::to_string(interior->dimension()) +
                          " does not match declared dimension " +
                          std::to_string(dimension));
    if (levels.size() > static_cast<std::size_t>(dimension) + 1)
        throw DomainError("SNC data: more than n+1 levels");
    for (std::size_t l = 1; l < levels.size(); ++l) {
        const Expr& level = *levels[l];
        if (level.kind() == ExprKind::Empty)
            continue;
        if (!level.smooth() || !level.complete())
            throw DomainError("SNC data: level " + std::to_string(l) +
                              " must be smooth and complete");
        if (level.dimension() != dimension - static_cast<int>(l))
            throw DomainError("SNC data: level " + std::to_string(l) +
                              " has dimension " +
                              std::to_string(level.dimension()) +
                              ", expected " +
                              std::to_string(dimension - static_cast<int>(l)));
    }
}

MotivicClass chi_ordinary(const SNCData& d, const RegistryPtr& reg) {
    d.validate();
    const Laurent minus_l = -Laurent::lefschetz();
    MotivicClass acc = MotivicClass::zero(reg);
    for (std::size_t l = 0; l < d.levels.size(); ++l)
        acc += class_of(*d.levels[l], reg) * minus_l.pow(static_cast<int>(l));
    return acc;
}

MotivicClass pair_chi(const SNCData& dx, const SNCData& dy,
                      const RegistryPtr& reg) {
    return chi_ordinary(dx, reg) - chi_ordinary(dy, reg);
}

std::string PrespaarResult::diagnostic() const {
    std::ostringstream out;
    out << (ok ? "consistent" : "MISMATCH") << ": sum (-L)^l [D^(l)] = "
        << chi_side.to_string() << "; L^dim * dual = "
        << dual_side.to_string();
    return out.str();
}

PrespaarResult verify_prespaar(const SNCData& d, const RegistryPtr& reg) {
    PrespaarResult r;
    r.chi_side = chi_ordinary(d, reg);
    const MotivicClass interior = class_of(*d.interior, reg);
    r.dual_side = dual_k(interior) * Laurent::monomial(d.dimension, 1);
    r.ok = r.chi_side == r.dual_side;
    return r;
}

} // namespace motivic
