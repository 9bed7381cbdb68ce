#include <motivic/motivic_class.hpp>

#include <sstream>

namespace motivic {

MotivicClass::MotivicClass(RegistryPtr reg, CoeffMap coeffs)
    : reg_(std::move(reg)), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

MotivicClass MotivicClass::zero(RegistryPtr reg) {
    return MotivicClass(std::move(reg), {});
}

MotivicClass MotivicClass::unit(RegistryPtr reg) {
    GeneratorId pt = reg->point();
    return MotivicClass(std::move(reg), {{pt, Laurent::constant(1)}});
}

MotivicClass MotivicClass::scalar(RegistryPtr reg, Laurent p) {
    GeneratorId pt = reg->point();
    return MotivicClass(std::move(reg), {{pt, std::move(p)}});
}

MotivicClass MotivicClass::generator(RegistryPtr reg, GeneratorId g) {
    reg->info(g); // validate
    return MotivicClass(std::move(reg), {{g, Laurent::constant(1)}});
}

bool MotivicClass::is_L_pure() const {
    if (coeffs_.empty())
        return true;
    return coeffs_.size() == 1 && coeffs_.begin()->first == reg_->point();
}

Laurent MotivicClass::as_laurent() const {
    if (!is_L_pure())
        throw DomainError("class is not L-pure: " + to_string());
    if (coeffs_.empty())
        return Laurent();
    return coeffs_.begin()->second;
}

void MotivicClass::require_same_registry(const MotivicClass& rhs) const {
    if (reg_ && rhs.reg_ && reg_ != rhs.reg_)
        throw DomainError("registry mismatch between motivic classes");
}

MotivicClass MotivicClass::operator-() const {
    CoeffMap r;
    for (const auto& [g, p] : coeffs_)
        r[g] = -p;
    return MotivicClass(reg_, std::move(r));
}

MotivicClass MotivicClass::operator+(const MotivicClass& rhs) const {
    require_same_registry(rhs);
    CoeffMap r = coeffs_;
    for (const auto& [g, p] : rhs.coeffs_) {
        auto it = r.find(g);
        if (it == r.end())
            r[g] = p;
        else
            it->second += p;
    }
    return MotivicClass(reg_ ? reg_ : rhs.reg_, std::move(r));
}

MotivicClass MotivicClass::operator-(const MotivicClass& rhs) const {
    return *this + (-rhs);
}

MotivicClass MotivicClass::operator*(const MotivicClass& rhs) const {
    require_same_registry(rhs);
    RegistryPtr reg = reg_ ? reg_ : rhs.reg_;
    CoeffMap r;
    for (const auto& [g, p] : coeffs_)
        for (const auto& [h, q] : rhs.coeffs_) {
            Laurent pq = p * q;
            for (const auto& [k, c] : reg->product(g, h)) {
                auto it = r.find(k);
                if (it == r.end())
                    r[k] = pq * c;
                else
                    it->second += pq * c;
            }
        }
    return MotivicClass(std::move(reg), std::move(r));
}

MotivicClass MotivicClass::operator*(const Laurent& scalar) const {
    CoeffMap r;
    for (const auto& [g, p] : coeffs_)
        r[g] = p * scalar;
    return MotivicClass(reg_, std::move(r));
}

bool MotivicClass::operator==(const MotivicClass& rhs) const {
    if (coeffs_ != rhs.coeffs_)
        return false;
    return coeffs_.empty() || !reg_ || !rhs.reg_ || reg_ == rhs.reg_;
}

Rational MotivicClass::realize(Measure measure, const Rational& q) const {
    if (!is_L_pure()) {
        std::ostringstream msg;
        msg << "unresolved generators in realization:";
        for (const auto& [g, p] : coeffs_)
            if (g != reg_->point())
                msg << " " << reg_->info(g).name;
        throw DomainError(msg.str());
    }
    return as_laurent().substitute(measure == Measure::Euler ? Rational(1) : q);
}

namespace {

std::string render(const MotivicClass::CoeffMap& coeffs,
                   const GeneratorRegistry& reg, GeneratorId point,
                   bool latex) {
    if (coeffs.empty())
        return "0";
    if (coeffs.size() == 1 && coeffs.begin()->first == point)
        return latex ? coeffs.begin()->second.to_latex()
                     : coeffs.begin()->second.to_string();
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, p] : coeffs) {
        if (!first)
            out << " + ";
        first = false;
        const std::string name =
            latex ? "[\\mathrm{" + reg.info(g).name + "}]" : reg.info(g).name;
        if (g == point)
            out << "(" << (latex ? p.to_latex() : p.to_string()) << ")";
        else if (p.is_one())
            out << name;
        else
            out << "(" << (latex ? p.to_latex() : p.to_string()) << ")"
                << (latex ? "\\cdot " : "*") << name;
    }
    return out.str();
}

} // namespace

std::string MotivicClass::to_string() const {
    if (!reg_)
        return "0";
    return render(coeffs_, *reg_, reg_->point(), false);
}

std::string MotivicClass::to_latex() const {
    if (!reg_)
        return "0";
    return render(coeffs_, *reg_, reg_->point(), true);
}

} // namespace motivic
