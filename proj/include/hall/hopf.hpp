#pragma once

// Coalgebra structure on the extended twisted Ringel-Hall algebra: Green's
// coproduct, the counit, the Hopf pairing, and the naive-lattice cross
// multiplication law they induce.

#include "hall/engine.hpp"

namespace hall {

struct TensorElement {
    std::map<std::pair<Word, Word>, TwistScalar> terms;

    void add_term(const Word& a, const Word& b, const TwistScalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

class HopfLayer {
public:
    explicit HopfLayer(Backend& backend)
        : backend_(backend), spec_(make_spec(AlgebraId::HTwE, backend)) {}

    const AlgebraSpec& spec() const { return spec_; }
    Backend& backend() const { return backend_; }

    // The basis word [A] * k_alpha (either part may be trivial).
    Word basis_word(ClassId a, const K0& alpha) const;
    Element basis_element(ClassId a, const K0& alpha) const;

    TensorElement coproduct(const Element& h) const;
    TwistScalar counit(const Element& h) const;
    TwistScalar pairing(const Element& x, const Element& y) const;

    // Def-3.1 cross law: (lower at slot n) * (upper at slot n+1), expressed in
    // the naive lattice algebra with slot letters at degrees n and n+1.
    Element cross_product(const Element& lower, long slot, const Element& upper,
                          const AlgebraSpec& naive) const;

    bool coassociative(const Element& h) const;
    bool counit_laws(const Element& h) const;

private:
    std::pair<ClassId, K0> split_word(const Word& w) const;
    TwistScalar pairing_words(const Word& x, const Word& y) const;

    Backend& backend_;
    AlgebraSpec spec_;
};

}  // namespace hall
