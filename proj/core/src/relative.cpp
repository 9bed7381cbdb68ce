#include <motivic/relative.hpp>

#include <set>
#include <sstream>

namespace motivic {

Base::Base(std::string name, std::vector<Stratum> strata)
    : name_(std::move(name)), strata_(std::move(strata)) {
    std::set<std::string> seen;
    for (const auto& s : strata_) {
        if (s.id.empty())
            throw DomainError("base '" + name_ + "': empty stratum id");
        if (!seen.insert(s.id).second)
            throw DomainError("base '" + name_ + "': duplicate stratum id '" +
                              s.id + "'");
        if (s.local_dim < 0)
            throw DomainError("base '" + name_ + "': negative local_dim on '" +
                              s.id + "'");
    }
}

bool Base::has_stratum(const std::string& id) const {
    for (const auto& s : strata_)
        if (s.id == id)
            return true;
    return false;
}

const Stratum& Base::stratum(const std::string& id) const {
    for (const auto& s : strata_)
        if (s.id == id)
            return s;
    throw DomainError("base '" + name_ + "': no stratum '" + id + "'");
}

bool Base::operator==(const Base& rhs) const {
    if (strata_.size() != rhs.strata_.size())
        return false;
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        const Stratum& a = strata_[i];
        const Stratum& b = rhs.strata_[i];
        if (a.id != b.id || a.local_dim != b.local_dim || !(a.cls == b.cls))
            return false;
    }
    return true;
}

RelClass::RelClass(BasePtr base, std::map<std::string, MotivicClass> values)
    : base_(std::move(base)), values_(std::move(values)) {
    for (auto it = values_.begin(); it != values_.end();) {
        if (!base_->has_stratum(it->first))
            throw DomainError("relative class: '" + it->first +
                              "' is not a stratum of base '" + base_->name() +
                              "'");
        if (it->second.is_zero())
            it = values_.erase(it);
        else
            ++it;
    }
}

RelClass RelClass::zero(BasePtr base) { return RelClass(std::move(base), {}); }

RelClass RelClass::unit(BasePtr base, const RegistryPtr& reg) {
    std::map<std::string, MotivicClass> v;
    for (const auto& s : base->strata())
        v[s.id] = MotivicClass::unit(reg);
    return RelClass(std::move(base), std::move(v));
}

MotivicClass RelClass::at(const std::string& stratum_id) const {
    auto it = values_.find(stratum_id);
    if (it != values_.end())
        return it->second;
    return MotivicClass();
}

void RelClass::require_same_base(const RelClass& rhs) const {
    if (!(*base_ == *rhs.base_))
        throw DomainError("base mismatch between relative classes ('" +
                          base_->name() + "' vs '" + rhs.base_->name() + "')");
}

RelClass RelClass::operator+(const RelClass& rhs) const {
    require_same_base(rhs);
    auto v = values_;
    for (const auto& [id, c] : rhs.values_) {
        auto it = v.find(id);
        if (it == v.end())
            v[id] = c;
        else
            it->second += c;
    }
    return RelClass(base_, std::move(v));
}

RelClass RelClass::operator-(const RelClass& rhs) const {
    require_same_base(rhs);
    auto v = values_;
    for (const auto& [id, c] : rhs.values_) {
        auto it = v.find(id);
        if (it == v.end())
            v[id] = -c;
        else
            it->second -= c;
    }
    return RelClass(base_, std::move(v));
}

RelClass RelClass::operator*(const MotivicClass& scalar) const {
    std::map<std::string, MotivicClass> v;
    for (const auto& [id, c] : values_)
        v[id] = c * scalar;
    return RelClass(base_, std::move(v));
}

bool RelClass::operator==(const RelClass& rhs) const {
    return *base_ == *rhs.base_ && values_ == rhs.values_;
}

std::string RelClass::to_string() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& s : base_->strata()) {
        auto it = values_.find(s.id);
        if (it == values_.end())
            continue;
        if (!first)
            out << ", ";
        first = false;
        out << s.id << ": " << it->second.to_string();
    }
    out << "}";
    return out.str();
}

StratMap::StratMap(std::string name, BasePtr source, BasePtr target,
                   std::map<std::string, std::string> assignment,
                   std::map<std::string, MotivicClass> rel_fiber,
                   std::optional<int> smooth_rel_dim)
    : name_(std::move(name)), source_(std::move(source)),
      target_(std::move(target)), assignment_(std::move(assignment)),
      rel_fiber_(std::move(rel_fiber)), smooth_rel_dim_(smooth_rel_dim) {
    for (const auto& s : source_->strata()) {
        auto it = assignment_.find(s.id);
        if (it == assignment_.end())
            throw DomainError("map '" + name_ + "': stratum '" + s.id +
                              "' has no image");
        if (!target_->has_stratum(it->second))
            throw DomainError("map '" + name_ + "': image '" + it->second +
                              "' is not a stratum of '" + target_->name() +
                              "'");
        auto fit = rel_fiber_.find(s.id);
        if (fit == rel_fiber_.end())
            throw DomainError("map '" + name_ + "': stratum '" + s.id +
                              "' has no fiber class");
        const Stratum& t = target_->stratum(it->second);
        if (!(s.cls == t.cls * fit->second))
            throw DomainError(
                "map '" + name_ + "': piecewise triviality fails on '" + s.id +
                "': " + s.cls.to_string() + " != (" + t.cls.to_string() +
                ")*(" + fit->second.to_string() + ")");
        if (smooth_rel_dim_ &&
            s.local_dim != t.local_dim + *smooth_rel_dim_)
            throw DomainError("map '" + name_ + "': local_dim(" + s.id +
                              ") = " + std::to_string(s.local_dim) +
                              " violates declared relative dimension " +
                              std::to_string(*smooth_rel_dim_));
    }
}

const std::string& StratMap::image_of(const std::string& s) const {
    auto it = assignment_.find(s);
    if (it == assignment_.end())
        throw DomainError("map '" + name_ + "': no image for stratum '" + s +
                          "'");
    return it->second;
}

const MotivicClass& StratMap::fiber_of(const std::string& s) const {
    auto it = rel_fiber_.find(s);
    if (it == rel_fiber_.end())
        throw DomainError("map '" + name_ + "': no fiber for stratum '" + s +
                          "'");
    return it->second;
}

StratMap StratMap::identity(const std::string& name, BasePtr base,
                            const RegistryPtr& reg) {
    std::map<std::string, std::string> assign;
    std::map<std::string, MotivicClass> fibers;
    for (const auto& s : base->strata()) {
        assign[s.id] = s.id;
        fibers[s.id] = MotivicClass::unit(reg);
    }
    return StratMap(name, base, base, std::move(assign), std::move(fibers), 0);
}

namespace {

void require_base(const BasePtr& expected, const RelClass& a,
                  const char* what) {
    if (!(*expected == *a.base()))
        throw DomainError(std::string(what) +
                          ": relative class lives over the wrong base");
}

} // namespace

RelClass push_shriek(const StratMap& f, const RelClass& a) {
    require_base(f.source(), a, "f_!");
    std::map<std::string, MotivicClass> v;
    for (const auto& [s, c] : a.values()) {
        const std::string& t = f.image_of(s);
        MotivicClass term = f.fiber_of(s) * c;
        auto it = v.find(t);
        if (it == v.end())
            v[t] = std::move(term);
        else
            it->second += term;
    }
    return RelClass(f.target(), std::move(v));
}

RelClass pull_star(const StratMap& f, const RelClass& b) {
    require_base(f.target(), b, "f^*");
    std::map<std::string, MotivicClass> v;
    for (const auto& s : f.source()->strata()) {
        MotivicClass c = b.at(f.image_of(s.id));
        if (!c.is_zero())
            v[s.id] = std::move(c);
    }
    return RelClass(f.source(), std::move(v));
}

RelClass rel_dual(const RelClass& a) {
    std::map<std::string, MotivicClass> v;
    for (const auto& [s, c] : a.values()) {
        const int d = a.base()->stratum(s).local_dim;
        v[s] = dual_k(c) * Laurent::monomial(-d, 1);
    }
    return RelClass(a.base(), std::move(v));
}

RelClass push_star(const StratMap& f, const RelClass& a) {
    return rel_dual(push_shriek(f, rel_dual(a)));
}

RelClass pull_shriek(const StratMap& f, const RelClass& b) {
    return rel_dual(pull_star(f, rel_dual(b)));
}

RelClass tensor(const RelClass& a, const RelClass& b) {
    if (!(*a.base() == *b.base()))
        throw DomainError("tensor: base mismatch");
    std::map<std::string, MotivicClass> v;
    for (const auto& [s, c] : a.values()) {
        MotivicClass other = b.at(s);
        if (!other.is_zero())
            v[s] = c * other;
    }
    return RelClass(a.base(), std::move(v));
}

RelClass hom(const RelClass& a, const RelClass& b) {
    return rel_dual(tensor(a, rel_dual(b)));
}

RelClass dualizing_element(const BasePtr& base, const RegistryPtr& reg) {
    return rel_dual(RelClass::unit(base, reg));
}

MotivicClass total(const RelClass& a, const RegistryPtr& reg) {
    MotivicClass acc = MotivicClass::zero(reg);
    for (const auto& [s, c] : a.values())
        acc += a.base()->stratum(s).cls * c;
    return acc;
}

namespace {

std::string pair_id(const std::string& a, const std::string& b) {
    return a + "|" + b;
}

} // namespace

BasePtr product_base(const BasePtr& s, const BasePtr& t) {
    std::vector<Stratum> strata;
    for (const auto& a : s->strata())
        for (const auto& b : t->strata())
            strata.push_back({pair_id(a.id, b.id), a.local_dim + b.local_dim,
                              a.cls * b.cls});
    return std::make_shared<Base>(s->name() + "x" + t->name(),
                                  std::move(strata));
}

RelClass box(const RelClass& a, const RelClass& b) {
    BasePtr prod = product_base(a.base(), b.base());
    std::map<std::string, MotivicClass> v;
    for (const auto& [s, c] : a.values())
        for (const auto& [t, d] : b.values())
            v[pair_id(s, t)] = c * d;
    return RelClass(std::move(prod), std::move(v));
}

StratMap product_map(const StratMap& f, const StratMap& g,
                     const RegistryPtr& reg) {
    (void)reg;
    BasePtr source = product_base(f.source(), g.source());
    BasePtr target = product_base(f.target(), g.target());
    std::map<std::string, std::string> assign;
    std::map<std::string, MotivicClass> fibers;
    for (const auto& a : f.source()->strata())
        for (const auto& b : g.source()->strata()) {
            const std::string id = pair_id(a.id, b.id);
            assign[id] = pair_id(f.image_of(a.id), g.image_of(b.id));
            fibers[id] = f.fiber_of(a.id) * g.fiber_of(b.id);
        }
    std::optional<int> m;
    if (f.smooth_rel_dim() && g.smooth_rel_dim())
        m = *f.smooth_rel_dim() + *g.smooth_rel_dim();
    return StratMap(f.name() + "x" + g.name(), std::move(source),
                    std::move(target), std::move(assign), std::move(fibers),
                    m);
}

StratMap projection_first(const BasePtr& s, const BasePtr& t,
                          const RegistryPtr& reg) {
    (void)reg;
    BasePtr source = product_base(s, t);
    std::map<std::string, std::string> assign;
    std::map<std::string, MotivicClass> fibers;
    for (const auto& a : s->strata())
        for (const auto& b : t->strata()) {
            const std::string id = pair_id(a.id, b.id);
            assign[id] = a.id;
            fibers[id] = b.cls;
        }
    // The projection is smooth in the model exactly when the second factor
    // is equidimensional.
    std::optional<int> m;
    if (!t->strata().empty()) {
        m = t->strata().front().local_dim;
        for (const auto& b : t->strata())
            if (b.local_dim != *m) {
                m.reset();
                break;
            }
    }
    return StratMap("pr_" + s->name(), std::move(source), s,
                    std::move(assign), std::move(fibers), m);
}

PullbackSquare pullback_square(const StratMap& f, const StratMap& pi_prime,
                               const RegistryPtr& reg) {
    (void)reg;
    if (!(*f.target() == *pi_prime.target()))
        throw DomainError("pullback_square: the two maps must share a target");

    std::vector<Stratum> strata;
    std::map<std::string, std::string> g_assign, pi_assign;
    std::map<std::string, MotivicClass> g_fibers, pi_fibers;
    for (const auto& s : f.source()->strata())
        for (const auto& t : pi_prime.source()->strata()) {
            if (f.image_of(s.id) != pi_prime.image_of(t.id))
                continue;
            const Stratum& u = f.target()->stratum(f.image_of(s.id));
            const std::string id = pair_id(s.id, t.id);
            strata.push_back({id, s.local_dim + t.local_dim - u.local_dim,
                              s.cls * pi_prime.fiber_of(t.id)});
            g_assign[id] = t.id;
            g_fibers[id] = f.fiber_of(s.id);
            pi_assign[id] = s.id;
            pi_fibers[id] = pi_prime.fiber_of(t.id);
        }
    auto corner = std::make_shared<Base>(
        f.source()->name() + "x_" + f.target()->name() + "_" +
            pi_prime.source()->name(),
        std::move(strata));

    PullbackSquare square{
        corner,
        StratMap("g", corner, pi_prime.source(), std::move(g_assign),
                 std::move(g_fibers), f.smooth_rel_dim()),
        StratMap("pi", corner, f.source(), std::move(pi_assign),
                 std::move(pi_fibers), pi_prime.smooth_rel_dim())};
    return square;
}

} // namespace motivic
