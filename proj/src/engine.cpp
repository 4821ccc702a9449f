#include "hall/engine.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace hall {

namespace {

// Sort rank; a word is normal iff ranks strictly increase left to right.
std::pair<int, long> rank(const Generator& g, const AlgebraSpec& spec) {
    int side;
    if (spec.kappa_left)
        side = g.is_kappa() ? 0 : 1;
    else
        side = g.is_kappa() ? 1 : 0;
    long key = g.kind == GenKind::KappaPlain ? 0 : -g.degree;
    return {side, key};
}

bool reducible(const Generator& a, const Generator& b, const AlgebraSpec& spec) {
    return rank(a, spec) >= rank(b, spec);
}

// (object inversions, length, kappa displacement, kappa inversions); every
// rewrite step must decrease this lexicographically.
using Measure = std::array<long, 4>;

Measure measure(const Word& w, const AlgebraSpec& spec) {
    long obj_inv = 0, kdisp = 0, kinv = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_object()) {
            for (size_t j = i + 1; j < w.size(); ++j)
                if (w[j].is_object() && w[i].degree < w[j].degree) ++obj_inv;
        } else {
            long objs = 0;
            if (spec.kappa_left) {
                for (size_t j = 0; j < i; ++j)
                    if (w[j].is_object()) ++objs;
            } else {
                for (size_t j = i + 1; j < w.size(); ++j)
                    if (w[j].is_object()) ++objs;
            }
            kdisp += objs;
            for (size_t j = i + 1; j < w.size(); ++j)
                if (w[j].is_kappa() && w[i].degree < w[j].degree) ++kinv;
        }
    }
    return {obj_inv, static_cast<long>(w.size()), kdisp, kinv};
}

Word splice(const Word& w, size_t i, const Word& repl) {
    Word out;
    out.reserve(w.size() - 2 + repl.size());
    out.insert(out.end(), w.begin(), w.begin() + i);
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), w.begin() + i + 2, w.end());
    return out;
}

std::vector<std::pair<TwistScalar, Word>> apply_rule(const Word& w, size_t i,
                                                     const AlgebraSpec& spec) {
    const Generator& a = w[i];
    const Generator& b = w[i + 1];
    Backend& bk = *spec.backend;
    std::vector<std::pair<TwistScalar, Word>> out;
    if (a.is_object() && b.is_object()) {
        if (a.degree == b.degree) {
            for (auto& [c, coeff] : spec.merge_objects(a.cls, b.cls)) {
                Word repl;
                if (c != bk.zero_class()) repl.push_back(Generator::object(a.kind, c, a.degree));
                out.emplace_back(coeff, splice(w, i, repl));
            }
        } else if (b.degree == a.degree + 1) {
            if (!spec.adjacent_rule)
                throw KindError("algebra '" + spec.name + "' admits a single degree only");
            for (auto& term : spec.adjacent_rule(a.cls, b.cls, a.degree))
                out.emplace_back(term.coeff, splice(w, i, term.word));
        } else {
            TwistScalar c = spec.far_swap(a.cls, a.degree, b.cls, b.degree);
            out.emplace_back(c, splice(w, i, {b, a}));
        }
    } else if (a.is_kappa() && b.is_kappa()) {
        if (a.kind == GenKind::KappaPlain || a.degree == b.degree) {
            TwistScalar coeff = spec.kappa_merge(a.k0, b.k0);
            K0 sum = k0_add(a.k0, b.k0);
            Word repl;
            if (!k0_is_zero(sum)) {
                repl.push_back(a.kind == GenKind::KappaPlain ? Generator::kappa_plain(sum)
                                                             : Generator::kappa(sum, a.degree));
            }
            out.emplace_back(coeff, splice(w, i, repl));
        } else {
            TwistScalar c = spec.kappa_kappa_swap(a.k0, a.degree, b.k0, b.degree);
            out.emplace_back(c, splice(w, i, {b, a}));
        }
    } else if (a.is_object() && b.is_kappa()) {
        TwistScalar c = spec.obj_kappa_swap(a.cls, a.degree, b.k0, b.degree);
        out.emplace_back(c, splice(w, i, {b, a}));
    } else {  // kappa then object, kappa moves right (kappa_right algebras)
        TwistScalar c = spec.obj_kappa_swap(b.cls, b.degree, a.k0, a.degree);
        out.emplace_back(c, splice(w, i, {b, a}));
    }
    return out;
}

}  // namespace

Word strip_units(Word w) {
    w.erase(std::remove_if(w.begin(), w.end(),
                           [](const Generator& g) {
                               return g.is_object() ? g.cls == 0 : k0_is_zero(g.k0);
                           }),
            w.end());
    return w;
}

bool is_normal_word(const Word& w, const AlgebraSpec& spec) {
    for (auto& g : w) {
        if (!spec.admits(g)) return false;
        if (g.is_object() ? g.cls == 0 : k0_is_zero(g.k0)) return false;
    }
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (reducible(w[i], w[i + 1], spec)) return false;
    return true;
}

Element normalize(const Element& x, const AlgebraSpec& spec, size_t term_ceiling) {
    Element out;
    std::vector<std::pair<Word, TwistScalar>> work;
    for (auto& [w, c] : x.terms) {
        for (auto& g : w) spec.require_admissible(g);
        work.emplace_back(strip_units(w), c);
    }
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        size_t red = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (reducible(w[i], w[i + 1], spec)) { red = i; break; }
        if (red == w.size()) {
            out.add_term(w, c);
            continue;
        }
        Measure before = measure(w, spec);
        for (auto& [s, w2] : apply_rule(w, red, spec)) {
            if (measure(w2, spec) >= before)
                throw BackendError("rewrite step failed to decrease the termination measure");
            work.emplace_back(std::move(w2), c * s);
        }
        if (work.size() + out.terms.size() > term_ceiling)
            throw CapacityError("normalization exceeded the term ceiling of " +
                                std::to_string(term_ceiling));
    }
    return out;
}

Element multiply(const Element& x, const Element& y, const AlgebraSpec& spec,
                 size_t term_ceiling) {
    Element concat;
    for (auto& [wx, cx] : x.terms)
        for (auto& [wy, cy] : y.terms) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            concat.add_term(w, cx * cy);
        }
    return normalize(concat, spec, term_ceiling);
}

bool equal(const Element& x, const Element& y, const AlgebraSpec& spec) {
    return normalize(x - y, spec).is_zero();
}

Element letter(const AlgebraSpec& spec, const Generator& g) {
    return Element::single({g}, TwistScalar::one(spec.q()));
}

Element word_product(const AlgebraSpec& spec, const Word& w) {
    Element acc = Element::unit(spec.q());
    for (auto& g : w) acc = multiply(acc, letter(spec, g), spec);
    return acc;
}

}  // namespace hall
