#include "hall/quiver.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace hall {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long Fq::inv(long a) const {
    a %= q;
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    long t = 0, nt = 1, r = q, nr = a;
    while (nr != 0) {
        long k = r / nr;
        std::swap(t -= k * nt, nt);
        std::swap(r -= k * nr, nr);
    }
    return (t % q + q) % q;
}

FqMat FqMat::identity(int n) {
    FqMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMat mat_mul(const Fq& F, const FqMat& x, const FqMat& y) {
    if (x.cols != y.rows) throw std::logic_error("mat_mul: shape mismatch");
    FqMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = static_cast<int16_t>((z.at(i, j) + v * y.at(k, j)) % F.q);
        }
    return z;
}

FqMat mat_add(const Fq& F, const FqMat& x, const FqMat& y) {
    FqMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = static_cast<int16_t>(F.add(x.a[i], y.a[i]));
    return z;
}

FqMat mat_sub(const Fq& F, const FqMat& x, const FqMat& y) {
    FqMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = static_cast<int16_t>(F.sub(x.a[i], y.a[i]));
    return z;
}

std::vector<int> mat_rref(const Fq& F, FqMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col)) { p = r; break; }
        if (p < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        long piv_inv = F.inv(m.at(row, col));
        for (int c = 0; c < m.cols; ++c)
            m.at(row, c) = static_cast<int16_t>(F.mul(m.at(row, c), piv_inv));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || !m.at(r, col)) continue;
            long f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = static_cast<int16_t>(F.sub(m.at(r, c), F.mul(f, m.at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int mat_rank(const Fq& F, FqMat m) { return static_cast<int>(mat_rref(F, m).size()); }

bool mat_invertible(const Fq& F, const FqMat& m) {
    return m.rows == m.cols && mat_rank(F, m) == m.rows;
}

std::vector<std::vector<int16_t>> mat_nullspace(const Fq& F, FqMat m) {
    std::vector<int> pivots = mat_rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<int16_t>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int16_t> v(m.cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = static_cast<int16_t>(F.neg(m.at(static_cast<int>(r), free)));
        basis.push_back(std::move(v));
    }
    return basis;
}

void Quiver::validate() const {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        throw std::invalid_argument("quiver: duplicate vertex labels");
    int n = num_vertices();
    for (auto& [s, t] : arrows)
        if (s < 0 || t < 0 || s >= n || t >= n)
            throw std::invalid_argument("quiver: arrow endpoint out of range");
    // Kahn topological sort; leftovers mean a directed cycle.
    std::vector<int> indeg(n, 0);
    for (auto& [s, t] : arrows) indeg[t]++;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (!indeg[i]) stack.push_back(i);
    int visited = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++visited;
        for (auto& [s, t] : arrows)
            if (s == u && --indeg[t] == 0) stack.push_back(t);
    }
    if (visited != n)
        throw std::invalid_argument("quiver: directed cycle detected; only acyclic quivers are supported");
}

std::string Quiver::digest() const {
    // FNV-1a over a canonical rendering.
    std::string s;
    for (auto& v : vertices) s += v + ";";
    s += "|";
    for (auto& [a, b] : arrows) s += std::to_string(a) + ">" + std::to_string(b) + ";";
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Rep rep_direct_sum(const Quiver& Q, const Rep& x, const Rep& y) {
    Rep z;
    int n = Q.num_vertices();
    z.dims.resize(n);
    for (int i = 0; i < n; ++i) z.dims[i] = x.dims[i] + y.dims[i];
    for (size_t a = 0; a < Q.arrows.size(); ++a) {
        auto [s, t] = Q.arrows[a];
        FqMat m(z.dims[t], z.dims[s]);
        for (int i = 0; i < x.dims[t]; ++i)
            for (int j = 0; j < x.dims[s]; ++j) m.at(i, j) = x.mats[a].at(i, j);
        for (int i = 0; i < y.dims[t]; ++i)
            for (int j = 0; j < y.dims[s]; ++j)
                m.at(x.dims[t] + i, x.dims[s] + j) = y.mats[a].at(i, j);
        z.mats.push_back(std::move(m));
    }
    return z;
}

std::vector<RepMap> hom_basis(const Quiver& Q, const Fq& F, const Rep& x, const Rep& y) {
    int n = Q.num_vertices();
    // Unknowns: entries of phi_i (y.dims[i] x x.dims[i]), vertex blocks in order.
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + y.dims[i] * x.dims[i];
    int vars = offset[n];
    int eqs = 0;
    for (auto& [s, t] : Q.arrows) eqs += y.dims[t] * x.dims[s];
    FqMat sys(std::max(eqs, 1), std::max(vars, 1));
    if (vars == 0) return {};
    int row = 0;
    for (size_t a = 0; a < Q.arrows.size(); ++a) {
        auto [s, t] = Q.arrows[a];
        const FqMat& fx = x.mats[a];  // x_t x x_s? no: dims[t] x dims[s] of x
        const FqMat& fy = y.mats[a];
        // Equation: phi_t * fx - fy * phi_s = 0, entry (r, c) with r < y.dims[t], c < x.dims[s].
        for (int r = 0; r < y.dims[t]; ++r)
            for (int c = 0; c < x.dims[s]; ++c) {
                for (int k = 0; k < x.dims[t]; ++k)  // phi_t[r,k] * fx[k,c]
                    sys.at(row, offset[t] + r * x.dims[t] + k) = static_cast<int16_t>(
                        F.add(sys.at(row, offset[t] + r * x.dims[t] + k), fx.at(k, c)));
                for (int k = 0; k < y.dims[s]; ++k)  // -fy[r,k] * phi_s[k,c]
                    sys.at(row, offset[s] + k * x.dims[s] + c) = static_cast<int16_t>(
                        F.sub(sys.at(row, offset[s] + k * x.dims[s] + c), fy.at(r, k)));
                ++row;
            }
    }
    auto null_vecs = mat_nullspace(F, sys);
    std::vector<RepMap> basis;
    for (auto& v : null_vecs) {
        RepMap phi(n);
        for (int i = 0; i < n; ++i) {
            phi[i] = FqMat(y.dims[i], x.dims[i]);
            for (int r = 0; r < y.dims[i]; ++r)
                for (int c = 0; c < x.dims[i]; ++c)
                    phi[i].at(r, c) = v[offset[i] + r * x.dims[i] + c];
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

}  // namespace hall
