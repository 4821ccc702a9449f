#pragma once

// Straightening engine: rewrites words of graded generators into the
// PBW-type normal form declared by an AlgebraSpec (kappa letters on their
// side with strictly descending degrees, then object letters with strictly
// descending degrees).  Deterministic leftmost-reducible strategy; every
// rewrite step must strictly decrease a well-founded measure, which the
// engine asserts.

#include "hall/algebra.hpp"
#include "hall/element.hpp"

namespace hall {

inline constexpr size_t kDefaultTermCeiling = 200000;

// Removes unit letters (zero object class, zero kappa class) in place.
Word strip_units(Word w);
bool is_normal_word(const Word& w, const AlgebraSpec& spec);

Element normalize(const Element& x, const AlgebraSpec& spec,
                  size_t term_ceiling = kDefaultTermCeiling);
Element multiply(const Element& x, const Element& y, const AlgebraSpec& spec,
                 size_t term_ceiling = kDefaultTermCeiling);
bool equal(const Element& x, const Element& y, const AlgebraSpec& spec);

// Convenience: the element of a single (not yet normalized) letter.
Element letter(const AlgebraSpec& spec, const Generator& g);
// Product of letters, left to right.
Element word_product(const AlgebraSpec& spec, const Word& w);

}  // namespace hall
