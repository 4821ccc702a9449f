#pragma once

// Grothendieck-group classes as integer vectors over the quiver vertices.

#include <string>
#include <vector>

namespace hall {

using K0 = std::vector<long>;

inline K0 k0_zero(int n) { return K0(static_cast<size_t>(n), 0); }

inline bool k0_is_zero(const K0& a) {
    for (long x : a)
        if (x) return false;
    return true;
}

inline K0 k0_add(const K0& a, const K0& b) {
    K0 c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

inline K0 k0_sub(const K0& a, const K0& b) {
    K0 c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

inline K0 k0_neg(const K0& a) {
    K0 c(a);
    for (auto& x : c) x = -x;
    return c;
}

inline K0 k0_scale(long k, const K0& a) {
    K0 c(a);
    for (auto& x : c) x *= k;
    return c;
}

// Componentwise a <= b.
inline bool k0_leq(const K0& a, const K0& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::string k0_str(const K0& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

}  // namespace hall
