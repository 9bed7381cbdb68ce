#include <motivic/laurent.hpp>

#include <sstream>

namespace motivic {

void Laurent::set(int exponent, Int coefficient) {
    if (coefficient == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(coefficient);
}

Laurent Laurent::monomial(int exponent, Int coefficient) {
    Laurent p;
    p.set(exponent, std::move(coefficient));
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
}

int Laurent::min_exponent() const {
    if (terms_.empty())
        throw DomainError("min_exponent of the zero polynomial");
    return terms_.begin()->first;
}

int Laurent::max_exponent() const {
    if (terms_.empty())
        throw DomainError("max_exponent of the zero polynomial");
    return terms_.rbegin()->first;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    Laurent r = *this;
    for (const auto& [e, c] : rhs.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                r.terms_.erase(it);
        }
    }
    return r;
}

Laurent Laurent::operator-(const Laurent& rhs) const { return *this + (-rhs); }

Laurent Laurent::operator*(const Laurent& rhs) const {
    Laurent r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                Int prod = ca * cb;
                if (prod != 0)
                    r.terms_[ea + eb] = std::move(prod);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::pow(int n) const {
    if (n < 0)
        throw DomainError("Laurent::pow requires a nonnegative exponent");
    Laurent result = constant(1);
    Laurent base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Laurent Laurent::dual() const {
    Laurent r;
    for (const auto& [e, c] : terms_)
        r.terms_[-e] = c;
    return r;
}

Rational Laurent::substitute(const Rational& v) const {
    if (v == 0 && !terms_.empty() && min_exponent() < 0)
        throw DomainError("pole: substituting 0 into a Laurent polynomial "
                          "with negative exponents");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational power = 1;
        const Rational base = e >= 0 ? v : Rational(1) / v;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i)
            power *= base;
        acc += Rational(c) * power;
    }
    return acc;
}

namespace {

void append_term(std::ostringstream& out, bool first, int e, const Int& c,
                 bool latex) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0)
            out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
        out << mag.str();
        return;
    }
    if (mag != 1)
        out << mag.str() << (latex ? "\\cdot " : "*");
    if (latex) {
        out << "\\mathbb{L}";
        if (e != 1)
            out << "^{" << e << "}";
    } else {
        out << "L";
        if (e != 1)
            out << "^" << e;
    }
}

} // namespace

std::string Laurent::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, first, e, c, false);
        first = false;
    }
    return out.str();
}

std::string Laurent::to_latex() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, first, e, c, true);
        first = false;
    }
    return out.str();
}

} // namespace motivic
