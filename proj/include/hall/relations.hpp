#pragma once

// The defining relation families of each algebra, instantiated over a finite
// window (classes within the bound, degrees within [lo, hi], kappa classes on
// an integer grid).  Right-hand sides are computed from the backend's counting
// operations directly, independently of the engine's rule tables, so a
// corrupted table cannot verify itself.

#include <string>
#include <vector>

#include "hall/algebra.hpp"

namespace hall {

struct RelInstance {
    std::string label;
    Word lhs;                                            // product of letters
    std::vector<std::pair<TwistScalar, Word>> rhs;       // sum of scalar * products
};

struct RelFamily {
    std::string name;
    std::vector<RelInstance> instances;
};

struct RelWindow {
    long deg_lo = -2;
    long deg_hi = 3;
    long grid_radius = 2;
};

// All nonzero kappa-grid classes with coordinates in [-radius, radius].
std::vector<K0> kappa_grid(const Backend& b, long radius);

std::vector<RelFamily> relation_families(const AlgebraSpec& spec, const RelWindow& win);

}  // namespace hall
