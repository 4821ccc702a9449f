#pragma once

// Words of graded generators and their sparse linear combinations.  These are
// the vectors every algebra in the catalog acts on; the engine (engine.hpp)
// rewrites them into normal form.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hall/backend.hpp"
#include "hall/k0.hpp"
#include "hall/scalar.hpp"

namespace hall {

enum class GenKind : uint8_t { U, Z, KappaGraded, KappaPlain };

struct Generator {
    GenKind kind = GenKind::U;
    ClassId cls = 0;  // object letters (U, Z)
    K0 k0;            // kappa letters
    long degree = 0;  // absent (0) for KappaPlain

    bool is_object() const { return kind == GenKind::U || kind == GenKind::Z; }
    bool is_kappa() const { return !is_object(); }

    static Generator object(GenKind kind, ClassId cls, long degree) {
        Generator g;
        g.kind = kind;
        g.cls = cls;
        g.degree = degree;
        return g;
    }
    static Generator kappa(K0 alpha, long degree) {
        Generator g;
        g.kind = GenKind::KappaGraded;
        g.k0 = std::move(alpha);
        g.degree = degree;
        return g;
    }
    static Generator kappa_plain(K0 alpha) {
        Generator g;
        g.kind = GenKind::KappaPlain;
        g.k0 = std::move(alpha);
        return g;
    }

    auto key() const { return std::tie(kind, degree, cls, k0); }
};

inline bool operator<(const Generator& a, const Generator& b) { return a.key() < b.key(); }
inline bool operator==(const Generator& a, const Generator& b) { return a.key() == b.key(); }

using Word = std::vector<Generator>;

struct Element {
    std::map<Word, TwistScalar> terms;

    static Element zero() { return {}; }
    static Element unit(long q) {
        Element e;
        e.terms[{}] = TwistScalar::one(q);
        return e;
    }
    static Element single(Word w, TwistScalar c) {
        Element e;
        if (!c.is_zero()) e.terms[std::move(w)] = std::move(c);
        return e;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const TwistScalar& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const TwistScalar& c) const;
    bool operator==(const Element& o) const { return terms == o.terms; }
};

}  // namespace hall
