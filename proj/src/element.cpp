#include "hall/element.hpp"

namespace hall {

void Element::add_term(const Word& w, const TwistScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (auto& [w, c] : o.terms) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element Element::scaled(const TwistScalar& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (auto& [w, t] : terms) {
        TwistScalar s = t * c;
        if (!s.is_zero()) r.terms.emplace(w, std::move(s));
    }
    return r;
}

}  // namespace hall
