#include "hall/backend.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hall {

namespace {

// Solves A X = B where A has full column rank; throws if inconsistent.
FqMat lin_solve(const Fq& F, const FqMat& A, const FqMat& B) {
    FqMat aug(A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) aug.at(r, A.cols + c) = B.at(r, c);
    }
    auto pivots = mat_rref(F, aug);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != static_cast<int>(i) || pivots[i] >= A.cols)
            throw BackendError("lin_solve: system inconsistent or rank-deficient");
    if (static_cast<int>(pivots.size()) != A.cols)
        throw BackendError("lin_solve: matrix not of full column rank");
    FqMat X(A.cols, B.cols);
    for (int r = 0; r < A.cols; ++r)
        for (int c = 0; c < B.cols; ++c) X.at(r, c) = aug.at(r, A.cols + c);
    return X;
}

// Row-space basis (RREF rows) of the column space of m, i.e. of m^T.
FqMat column_space_rows(const Fq& F, const FqMat& m) {
    FqMat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    auto pivots = mat_rref(F, t);
    FqMat rows(static_cast<int>(pivots.size()), m.rows);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int c = 0; c < m.rows; ++c) rows.at(static_cast<int>(i), c) = t.at(static_cast<int>(i), c);
    return rows;
}

// All subspaces of F^d as RREF row-basis matrices, dimension 0..d.
std::vector<FqMat> all_subspaces(const Fq& F, int d) {
    std::vector<FqMat> out;
    out.push_back(FqMat(0, d));  // zero subspace
    for (int k = 1; k <= d; ++k) {
        // choose pivot columns p_0 < ... < p_{k-1}
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            // free positions: (row i, col j) with j > piv[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(d, false);
            for (int p : piv) is_piv[p] = true;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < d; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);
            std::vector<int> counter(free_pos.size(), 0);
            while (true) {
                FqMat m(k, d);
                for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    m.at(free_pos[t].first, free_pos[t].second) = static_cast<int16_t>(counter[t]);
                out.push_back(std::move(m));
                size_t t = 0;
                while (t < counter.size() && ++counter[t] == F.q) counter[t++] = 0;
                if (t == counter.size()) break;
                if (counter.empty()) break;
            }
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && piv[i] == d - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

bool row_in_rowspace(const Fq& F, const FqMat& rref_rows, const std::vector<int16_t>& v) {
    // rref_rows is in RREF; reduce v against it and test for zero.
    std::vector<int16_t> w = v;
    for (int r = 0; r < rref_rows.rows; ++r) {
        int p = -1;
        for (int c = 0; c < rref_rows.cols; ++c)
            if (rref_rows.at(r, c)) { p = c; break; }
        if (p < 0 || !w[p]) continue;
        long f = w[p];
        for (int c = 0; c < rref_rows.cols; ++c)
            w[c] = static_cast<int16_t>(F.sub(w[c], F.mul(f, rref_rows.at(r, c))));
    }
    for (int16_t x : w)
        if (x) return false;
    return true;
}

uint64_t ipow_checked(long base, long exp, uint64_t cap) {
    uint64_t r = 1;
    for (long i = 0; i < exp; ++i) {
        r *= static_cast<uint64_t>(base);
        if (r > cap) return cap + 1;
    }
    return r;
}

mpz_class zpow(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

Backend::Backend(Quiver quiver, long q, K0 dim_bound, BackendLimits limits)
    : quiver_(std::move(quiver)), field_(q), bound_(std::move(dim_bound)), limits_(limits) {
    quiver_.validate();
    if (static_cast<int>(bound_.size()) != quiver_.num_vertices())
        throw std::invalid_argument("dim bound size does not match vertex count");
    for (long b : bound_)
        if (b < 0) throw std::invalid_argument("dim bound coordinates must be >= 0");
    digest_ = quiver_.digest() + "-q" + std::to_string(q);
    discover_indecomposables();
    enumerate_classes();
}

void Backend::discover_indecomposables() {
    int n = quiver_.num_vertices();
    // dim vectors in graded-lex order
    std::vector<K0> dims;
    K0 d = k0_zero(n);
    while (true) {
        if (!k0_is_zero(d)) dims.push_back(d);
        int i = 0;
        while (i < n && d[i] == bound_[i]) d[i++] = 0;
        if (i == n) break;
        ++d[i];
    }
    std::sort(dims.begin(), dims.end(), [](const K0& a, const K0& b) {
        long sa = 0, sb = 0;
        for (long x : a) sa += x;
        for (long x : b) sb += x;
        return sa != sb ? sa < sb : a < b;
    });

    std::vector<Rep> found;  // indecomposable representatives, discovery order
    for (const K0& dv : dims) {
        long entries = 0;
        for (auto& [s, t] : quiver_.arrows) entries += dv[t] * dv[s];
        if (ipow_checked(field_.q, entries, limits_.max_reps_per_dim) > limits_.max_reps_per_dim)
            throw CapacityError("too many representations of dimension vector " + k0_str(dv));
        Rep r;
        r.dims.assign(dv.begin(), dv.end());
        for (auto& [s, t] : quiver_.arrows) r.mats.push_back(FqMat(static_cast<int>(dv[t]), static_cast<int>(dv[s])));
        std::vector<int16_t*> slots;
        for (auto& m : r.mats)
            for (auto& e : m.a) slots.push_back(&e);
        while (true) {
            if (!find_nontrivial_idempotent(r).has_value()) {
                bool known = false;
                for (Rep& other : found) {
                    if (other.dims != r.dims) continue;
                    if (reps_isomorphic(other, r)) { known = true; break; }
                }
                if (!known) found.push_back(r);
            }
            size_t i = 0;
            while (i < slots.size() && ++*slots[i] == field_.q) *slots[i++] = 0;
            if (i == slots.size()) break;
            if (slots.empty()) break;
        }
    }

    // Names: simples by vertex, the rest by dimension vector with a
    // first-discovery suffix when several indecomposables share one.
    std::map<K0, int> dim_count;
    for (auto& r : found) {
        K0 dv(r.dims.begin(), r.dims.end());
        dim_count[dv]++;
    }
    std::map<K0, int> dim_seen;
    classes_.clear();
    ClassInfo zero;
    zero.dim = k0_zero(n);
    zero.name = "0";
    classes_.push_back(zero);
    for (auto& r : found) {
        K0 dv(r.dims.begin(), r.dims.end());
        std::string name;
        long total = 0;
        int vertex = -1;
        for (int i = 0; i < n; ++i) {
            total += dv[i];
            if (dv[i] == 1) vertex = i;
        }
        if (total == 1) {
            name = "S" + std::to_string(vertex + 1);
        } else {
            name = "I";
            for (int i = 0; i < n; ++i) name += (i ? "_" : "") + std::to_string(dv[i]);
            if (dim_count[dv] > 1) name += static_cast<char>('a' + dim_seen[dv]);
            dim_seen[dv]++;
        }
        ClassInfo info;
        info.dim = dv;
        info.name = name;
        info.has_rep = true;
        info.rep = r;
        ClassId id = static_cast<ClassId>(classes_.size());
        info.decomp = {{id, 1}};
        classes_.push_back(std::move(info));
        indec_ids_.push_back(id);
    }
}

void Backend::enumerate_classes() {
    // All multisets of indecomposables with total dim vector <= bound.
    std::vector<std::vector<std::pair<ClassId, int>>> multisets;
    std::vector<std::pair<ClassId, int>> cur;
    K0 acc = k0_zero(quiver_.num_vertices());
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == indec_ids_.size()) {
            if (!cur.empty()) multisets.push_back(cur);
            return;
        }
        self(self, idx + 1);
        ClassId id = indec_ids_[idx];
        const K0& dv = classes_[id].dim;
        int mult = 0;
        while (true) {
            K0 next = k0_add(acc, dv);
            if (!k0_leq(next, bound_)) break;
            acc = next;
            ++mult;
            cur.emplace_back(id, mult);
            self(self, idx + 1);
            cur.pop_back();
        }
        for (int i = 0; i < mult; ++i) acc = k0_sub(acc, dv);
    };
    rec(rec, 0);
    for (auto& ms : multisets) {
        // collapse (id, running mult) entries to final multiplicities
        std::map<ClassId, int> m;
        for (auto& [id, mult] : ms) m[id] = std::max(m[id], mult);
        ms.assign(m.begin(), m.end());
    }
    std::sort(multisets.begin(), multisets.end(), [&](const auto& a, const auto& b) {
        auto dim_of = [&](const auto& ms) {
            K0 d = k0_zero(quiver_.num_vertices());
            for (auto& [id, mult] : ms) d = k0_add(d, k0_scale(mult, classes_[id].dim));
            return d;
        };
        K0 da = dim_of(a), db = dim_of(b);
        long sa = 0, sb = 0;
        for (long x : da) sa += x;
        for (long x : db) sb += x;
        if (sa != sb) return sa < sb;
        if (da != db) return da < db;
        return a < b;
    });
    multisets.erase(std::unique(multisets.begin(), multisets.end()), multisets.end());

    decomp_index_.clear();
    name_index_.clear();
    name_index_["0"] = 0;
    for (auto& ms : multisets) {
        if (ms.size() == 1 && ms[0].second == 1) {
            decomp_index_[ms] = ms[0].first;  // the indecomposable itself
            name_index_[classes_[ms[0].first].name] = ms[0].first;
            continue;
        }
        ClassInfo info;
        info.decomp = ms;
        info.dim = k0_zero(quiver_.num_vertices());
        for (auto& [id, mult] : ms) info.dim = k0_add(info.dim, k0_scale(mult, classes_[id].dim));
        info.name = name_of_decomp(ms);
        ClassId id = static_cast<ClassId>(classes_.size());
        classes_.push_back(std::move(info));
        decomp_index_[classes_[id].decomp] = id;
        name_index_[classes_[id].name] = id;
    }
    num_bounded_ = static_cast<int>(classes_.size());
}

std::string Backend::name_of_decomp(const std::vector<std::pair<ClassId, int>>& decomp) const {
    if (decomp.empty()) return "0";
    std::string s;
    for (auto& [id, mult] : decomp) {
        if (!s.empty()) s += "+";
        if (mult > 1) s += std::to_string(mult);
        s += classes_[id].name;
    }
    return s;
}

std::optional<ClassId> Backend::class_by_name(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<ClassId> Backend::bounded_classes() const {
    std::vector<ClassId> out;
    // Listing order: zero, then ascending total dimension as enumerated.
    std::vector<std::pair<std::pair<long, K0>, ClassId>> keyed;
    for (ClassId c = 0; c < num_bounded_; ++c) {
        long s = 0;
        for (long x : classes_[c].dim) s += x;
        keyed.push_back({{s, classes_[c].dim}, c});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, c] : keyed) out.push_back(c);
    return out;
}

ClassId Backend::class_of_decomp(std::vector<std::pair<ClassId, int>> decomp) {
    if (decomp.empty()) return 0;
    std::sort(decomp.begin(), decomp.end());
    if (decomp.size() == 1 && decomp[0].second == 1) return decomp[0].first;
    auto it = decomp_index_.find(decomp);
    if (it != decomp_index_.end()) return it->second;
    // Overflow class (beyond the bound): registered without cached counts.
    ClassInfo info;
    info.decomp = decomp;
    info.dim = k0_zero(quiver_.num_vertices());
    for (auto& [id, mult] : decomp) info.dim = k0_add(info.dim, k0_scale(mult, classes_[id].dim));
    info.name = name_of_decomp(decomp);
    ClassId id = static_cast<ClassId>(classes_.size());
    classes_.push_back(std::move(info));
    decomp_index_[classes_[id].decomp] = id;
    name_index_[classes_[id].name] = id;
    return id;
}

ClassId Backend::direct_sum(ClassId a, ClassId b) {
    std::map<ClassId, int> m;
    for (auto& [id, mult] : classes_[check(a)].decomp) m[id] += mult;
    for (auto& [id, mult] : classes_[check(b)].decomp) m[id] += mult;
    return class_of_decomp({m.begin(), m.end()});
}

const Rep& Backend::class_rep(ClassId c) {
    ClassInfo& info = classes_[check(c)];
    if (!info.has_rep) {
        Rep acc;
        acc.dims.assign(info.dim.size(), 0);
        for (auto& [s, t] : quiver_.arrows) acc.mats.push_back(FqMat(0, 0));
        for (auto& [id, mult] : info.decomp)
            for (int i = 0; i < mult; ++i) acc = rep_direct_sum(quiver_, acc, classes_[id].rep);
        info.rep = std::move(acc);
        info.has_rep = true;
    }
    return info.rep;
}

std::optional<RepMap> Backend::find_nontrivial_idempotent(const Rep& r) {
    if (r.is_zero()) return std::nullopt;
    auto basis = hom_basis(quiver_, field_, r, r);
    size_t h = basis.size();
    if (ipow_checked(field_.q, static_cast<long>(h), limits_.max_end_elements) >
        limits_.max_end_elements)
        throw CapacityError("endomorphism space too large to enumerate");
    int n = quiver_.num_vertices();
    std::vector<int> coeff(h, 0);
    while (true) {
        size_t i = 0;
        while (i < h && ++coeff[i] == field_.q) coeff[i++] = 0;
        if (i == h) break;  // wrapped around: all elements seen
        RepMap e(n);
        for (int v = 0; v < n; ++v) e[v] = FqMat(r.dims[v], r.dims[v]);
        for (size_t b = 0; b < h; ++b) {
            if (!coeff[b]) continue;
            for (int v = 0; v < n; ++v)
                for (size_t k = 0; k < e[v].a.size(); ++k)
                    e[v].a[k] = static_cast<int16_t>(
                        field_.add(e[v].a[k], field_.mul(coeff[b], basis[b][v].a[k])));
        }
        bool idem = true, is_id = true, is_zero = true;
        for (int v = 0; v < n && idem; ++v) {
            if (!(mat_mul(field_, e[v], e[v]) == e[v])) idem = false;
            if (!(e[v] == FqMat::identity(r.dims[v]))) is_id = false;
            for (auto x : e[v].a)
                if (x) is_zero = false;
        }
        if (idem && !is_id && !is_zero) return e;
    }
    return std::nullopt;
}

bool Backend::reps_isomorphic(const Rep& x, const Rep& y) {
    if (x.dims != y.dims) return false;
    auto basis = hom_basis(quiver_, field_, x, y);
    size_t h = basis.size();
    long need = 0;
    for (int d : x.dims) need += d;
    if (need == 0) return true;
    if (h == 0) return false;
    if (ipow_checked(field_.q, static_cast<long>(h), limits_.max_end_elements) >
        limits_.max_end_elements)
        throw CapacityError("hom space too large for isomorphism search");
    int n = quiver_.num_vertices();
    std::vector<int> coeff(h, 0);
    while (true) {
        size_t i = 0;
        while (i < h && ++coeff[i] == field_.q) coeff[i++] = 0;
        if (i == h) break;
        RepMap phi(n);
        for (int v = 0; v < n; ++v) phi[v] = FqMat(y.dims[v], x.dims[v]);
        for (size_t b = 0; b < h; ++b) {
            if (!coeff[b]) continue;
            for (int v = 0; v < n; ++v)
                for (size_t k = 0; k < phi[v].a.size(); ++k)
                    phi[v].a[k] = static_cast<int16_t>(
                        field_.add(phi[v].a[k], field_.mul(coeff[b], basis[b][v].a[k])));
        }
        bool inv = true;
        for (int v = 0; v < n && inv; ++v)
            if (!mat_invertible(field_, phi[v])) inv = false;
        if (inv) return true;
    }
    return false;
}

void Backend::decompose_rep(const Rep& r, std::map<ClassId, int>& out) {
    if (r.is_zero()) return;
    auto idem = find_nontrivial_idempotent(r);
    if (!idem) {
        out[identify_indecomposable(r)]++;
        return;
    }
    int n = quiver_.num_vertices();
    auto split = [&](const RepMap& e) {
        Rep sub;
        std::vector<FqMat> incl(n);  // column form of the image basis
        sub.dims.resize(n);
        for (int v = 0; v < n; ++v) {
            FqMat rows = column_space_rows(field_, e[v]);
            sub.dims[v] = rows.rows;
            FqMat col(rows.cols, rows.rows);
            for (int i = 0; i < rows.rows; ++i)
                for (int j = 0; j < rows.cols; ++j) col.at(j, i) = rows.at(i, j);
            incl[v] = std::move(col);
        }
        for (size_t a = 0; a < quiver_.arrows.size(); ++a) {
            auto [s, t] = quiver_.arrows[a];
            if (sub.dims[t] == 0 || sub.dims[s] == 0) {
                sub.mats.push_back(FqMat(sub.dims[t], sub.dims[s]));
                continue;
            }
            sub.mats.push_back(lin_solve(field_, incl[t], mat_mul(field_, r.mats[a], incl[s])));
        }
        return sub;
    };
    RepMap comp(n);
    for (int v = 0; v < n; ++v) {
        comp[v] = FqMat::identity(r.dims[v]);
        comp[v] = mat_sub(field_, comp[v], (*idem)[v]);
    }
    decompose_rep(split(*idem), out);
    decompose_rep(split(comp), out);
}

ClassId Backend::identify_indecomposable(const Rep& r) {
    for (ClassId id : indec_ids_) {
        const ClassInfo& info = classes_[id];
        if (!std::equal(info.dim.begin(), info.dim.end(), r.dims.begin(), r.dims.end())) continue;
        if (reps_isomorphic(info.rep, r)) return id;
    }
    throw BackendError("indecomposable representation outside the enumerated bound");
}

ClassId Backend::identify(const Rep& r) {
    std::map<ClassId, int> parts;
    decompose_rep(r, parts);
    return class_of_decomp({parts.begin(), parts.end()});
}

// --- counting ---------------------------------------------------------------

long Backend::hom_dim(ClassId a, ClassId b) {
    check(a);
    check(b);
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = hom_memo_.find({a, b});
        if (it != hom_memo_.end()) return it->second;
    }
    long h = static_cast<long>(hom_basis(quiver_, field_, class_rep(a), class_rep(b)).size());
    std::lock_guard<std::mutex> lk(memo_mutex_);
    hom_memo_[{a, b}] = h;
    return h;
}

long Backend::euler_exponent(const K0& alpha, const K0& beta) const {
    long e = 0;
    for (size_t i = 0; i < alpha.size(); ++i) e += alpha[i] * beta[i];
    for (auto& [s, t] : quiver_.arrows) e -= alpha[s] * beta[t];
    return e;
}

long Backend::symmetrized_exponent(const K0& alpha, const K0& beta) const {
    return euler_exponent(alpha, beta) + euler_exponent(beta, alpha);
}

long Backend::ext1_dim(ClassId a, ClassId b) {
    long e = hom_dim(a, b) - euler_exponent(dim_vector(a), dim_vector(b));
    if (e < 0) throw BackendError("negative Ext^1 dimension: Euler form inconsistency");
    return e;
}

long Backend::aut_count(ClassId a) {
    check(a);
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = aut_memo_.find(a);
        if (it != aut_memo_.end()) return it->second;
    }
    long count = 0;
    if (a == 0) {
        count = 1;
    } else {
        const auto& elems = hom_elements(a, a);
        int n = quiver_.num_vertices();
        for (const RepMap& phi : elems) {
            bool inv = true;
            for (int v = 0; v < n && inv; ++v)
                if (!mat_invertible(field_, phi[v])) inv = false;
            if (inv) ++count;
        }
    }
    std::lock_guard<std::mutex> lk(memo_mutex_);
    aut_memo_[a] = count;
    return count;
}

const std::vector<RepMap>& Backend::hom_elements(ClassId a, ClassId b) {
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = hom_elems_memo_.find({a, b});
        if (it != hom_elems_memo_.end()) return it->second;
    }
    const Rep& x = class_rep(a);
    const Rep& y = class_rep(b);
    auto basis = hom_basis(quiver_, field_, x, y);
    size_t h = basis.size();
    uint64_t total = ipow_checked(field_.q, static_cast<long>(h), limits_.max_end_elements);
    if (total > limits_.max_end_elements)
        throw CapacityError("hom space of dimension " + std::to_string(h) + " too large to enumerate");
    int n = quiver_.num_vertices();
    std::vector<RepMap> elems;
    elems.reserve(static_cast<size_t>(total));
    std::vector<int> coeff(h, 0);
    while (true) {
        RepMap phi(n);
        for (int v = 0; v < n; ++v) phi[v] = FqMat(y.dims[v], x.dims[v]);
        for (size_t bIdx = 0; bIdx < h; ++bIdx) {
            if (!coeff[bIdx]) continue;
            for (int v = 0; v < n; ++v)
                for (size_t k = 0; k < phi[v].a.size(); ++k)
                    phi[v].a[k] = static_cast<int16_t>(
                        field_.add(phi[v].a[k], field_.mul(coeff[bIdx], basis[bIdx][v].a[k])));
        }
        elems.push_back(std::move(phi));
        size_t i = 0;
        while (i < h && ++coeff[i] == field_.q) coeff[i++] = 0;
        if (i == h || h == 0) break;
    }
    std::lock_guard<std::mutex> lk(memo_mutex_);
    return hom_elems_memo_[{a, b}] = std::move(elems);
}

const std::map<std::pair<ClassId, ClassId>, long>& Backend::subobject_table(ClassId c) {
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = sub_table_memo_.find(c);
        if (it != sub_table_memo_.end()) return it->second;
    }
    const Rep& R = class_rep(c);
    int n = quiver_.num_vertices();
    std::vector<std::vector<FqMat>> spaces(n);
    for (int v = 0; v < n; ++v) spaces[v] = all_subspaces(field_, R.dims[v]);
    std::map<std::pair<ClassId, ClassId>, long> table;
    std::vector<size_t> pick(n, 0);
    while (true) {
        // arrow stability of the chosen tuple
        bool stable = true;
        for (size_t a = 0; a < quiver_.arrows.size() && stable; ++a) {
            auto [s, t] = quiver_.arrows[a];
            const FqMat& Ws = spaces[s][pick[s]];
            const FqMat& Wt = spaces[t][pick[t]];
            for (int r = 0; r < Ws.rows && stable; ++r) {
                std::vector<int16_t> img(R.dims[t], 0);
                for (int i = 0; i < R.dims[t]; ++i) {
                    long acc = 0;
                    for (int j = 0; j < R.dims[s]; ++j) acc += static_cast<long>(R.mats[a].at(i, j)) * Ws.at(r, j);
                    img[i] = static_cast<int16_t>(acc % field_.q);
                }
                if (!row_in_rowspace(field_, Wt, img)) stable = false;
            }
        }
        if (stable) {
            // build sub and quotient representations
            Rep sub, quot;
            sub.dims.resize(n);
            quot.dims.resize(n);
            std::vector<FqMat> incl(n), proj(n), comp_cols(n);
            for (int v = 0; v < n; ++v) {
                const FqMat& W = spaces[v][pick[v]];
                int k = W.rows, d = R.dims[v];
                sub.dims[v] = k;
                quot.dims[v] = d - k;
                FqMat col(d, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < d; ++j) col.at(j, i) = W.at(i, j);
                incl[v] = col;
                // complete W with standard vectors at non-pivot columns
                std::vector<bool> piv(d, false);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < d; ++j)
                        if (W.at(i, j)) { piv[j] = true; break; }
                FqMat M(d, d);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < d; ++j) M.at(i, j) = W.at(i, j);
                int row = k;
                FqMat cc(d, d - k);
                int cidx = 0;
                for (int j = 0; j < d; ++j) {
                    if (piv[j]) continue;
                    M.at(row, j) = 1;
                    cc.at(j, cidx) = 1;
                    ++row;
                    ++cidx;
                }
                comp_cols[v] = cc;
                // projection: bottom (d-k) rows of (M^T)^{-1}
                FqMat MT(d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) MT.at(i, j) = M.at(j, i);
                FqMat inv = lin_solve(field_, MT, FqMat::identity(d));
                FqMat P(d - k, d);
                for (int i = 0; i < d - k; ++i)
                    for (int j = 0; j < d; ++j) P.at(i, j) = inv.at(k + i, j);
                proj[v] = P;
            }
            for (size_t a = 0; a < quiver_.arrows.size(); ++a) {
                auto [s, t] = quiver_.arrows[a];
                if (sub.dims[t] == 0 || sub.dims[s] == 0)
                    sub.mats.push_back(FqMat(sub.dims[t], sub.dims[s]));
                else
                    sub.mats.push_back(lin_solve(field_, incl[t], mat_mul(field_, R.mats[a], incl[s])));
                quot.mats.push_back(
                    mat_mul(field_, proj[t], mat_mul(field_, R.mats[a], comp_cols[s])));
            }
            ClassId sub_id = identify(sub);
            ClassId quot_id = identify(quot);
            table[{quot_id, sub_id}]++;
        }
        int v = 0;
        while (v < n && ++pick[v] == spaces[v].size()) pick[v++] = 0;
        if (v == n) break;
    }
    std::lock_guard<std::mutex> lk(memo_mutex_);
    return sub_table_memo_[c] = std::move(table);
}

long Backend::hall_number(ClassId a, ClassId b, ClassId c) {
    check(a);
    check(b);
    check(c);
    if (dim_vector(c) != k0_add(dim_vector(a), dim_vector(b))) return 0;
    if (!in_bound(c)) throw CapacityError("hall_number: middle class outside the enumerated bound");
    const auto& table = subobject_table(c);
    auto it = table.find({a, b});
    return it == table.end() ? 0 : it->second;
}

long Backend::ext_with_middle(ClassId a, ClassId b, ClassId c) {
    long g = hall_number(a, b, c);
    if (g == 0) return 0;
    mpz_class num = mpz_class(g) * zpow(field_.q, hom_dim(a, b)) * aut_count(a) * aut_count(b);
    mpz_class den = aut_count(c);
    if (num % den != 0) throw BackendError("Riedtmann-Peng count is not integral");
    mpz_class v = num / den;
    if (!v.fits_slong_p()) throw CapacityError("extension count overflows");
    return v.get_si();
}

Rat Backend::hall_coeff(ClassId a, ClassId b, ClassId c) {
    Rat r(ext_with_middle(a, b, c));
    r /= Rat(zpow(field_.q, hom_dim(a, b)));
    r.canonicalize();
    return r;
}

const std::map<ClassId, long>& Backend::ext_middle_distribution(ClassId a, ClassId b) {
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = ext_direct_memo_.find({a, b});
        if (it != ext_direct_memo_.end()) return it->second;
    }
    const Rep& A = class_rep(a);
    const Rep& B = class_rep(b);
    K0 mid_dim = k0_add(dim_vector(a), dim_vector(b));
    if (!k0_leq(mid_dim, bound_))
        throw CapacityError("extension middles of dimension " + k0_str(mid_dim) + " exceed the bound");
    int n = quiver_.num_vertices();
    long vars = 0;
    for (auto& [s, t] : quiver_.arrows) vars += A.dims[s] * B.dims[t];
    if (ipow_checked(field_.q, vars, limits_.max_cocycles) > limits_.max_cocycles)
        throw CapacityError("cocycle space too large to enumerate");
    std::map<ClassId, long> raw;
    std::vector<int> counter(vars, 0);
    while (true) {
        Rep mid;
        mid.dims.resize(n);
        for (int v = 0; v < n; ++v) mid.dims[v] = B.dims[v] + A.dims[v];
        size_t pos = 0;
        for (size_t arw = 0; arw < quiver_.arrows.size(); ++arw) {
            auto [s, t] = quiver_.arrows[arw];
            FqMat m(mid.dims[t], mid.dims[s]);
            for (int i = 0; i < B.dims[t]; ++i)
                for (int j = 0; j < B.dims[s]; ++j) m.at(i, j) = B.mats[arw].at(i, j);
            for (int i = 0; i < A.dims[t]; ++i)
                for (int j = 0; j < A.dims[s]; ++j)
                    m.at(B.dims[t] + i, B.dims[s] + j) = A.mats[arw].at(i, j);
            for (int i = 0; i < B.dims[t]; ++i)  // cocycle block: A_s -> B_t
                for (int j = 0; j < A.dims[s]; ++j)
                    m.at(i, B.dims[s] + j) = static_cast<int16_t>(counter[pos++]);
            mid.mats.push_back(std::move(m));
        }
        raw[identify(mid)]++;
        long i = 0;
        while (i < vars && ++counter[i] == field_.q) counter[i++] = 0;
        if (i == vars || vars == 0) break;
    }
    long hom_pairs = 0;
    for (int v = 0; v < n; ++v) hom_pairs += A.dims[v] * B.dims[v];
    mpz_class cobound = zpow(field_.q, hom_pairs - hom_dim(a, b));
    std::map<ClassId, long> out;
    for (auto& [cls, cnt] : raw) {
        mpz_class cm(cnt);
        if (cm % cobound != 0) throw BackendError("coboundary orbit count mismatch");
        out[cls] = mpz_class(cm / cobound).get_si();
    }
    std::lock_guard<std::mutex> lk(memo_mutex_);
    return ext_direct_memo_[{a, b}] = std::move(out);
}

long Backend::ext_with_middle_direct(ClassId a, ClassId b, ClassId c) {
    const auto& dist = ext_middle_distribution(a, b);
    auto it = dist.find(c);
    return it == dist.end() ? 0 : it->second;
}

Rat Backend::gamma(ClassId a, ClassId b, ClassId m, ClassId n) {
    check(a);
    check(b);
    check(m);
    check(n);
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = gamma_memo_.find({a, b, m, n});
        if (it != gamma_memo_.end()) return it->second;
    }
    Rat result(0);
    const K0 &da = dim_vector(a), &db = dim_vector(b), &dm = dim_vector(m), &dn = dim_vector(n);
    bool conserved = k0_sub(db, dm) == k0_sub(da, dn) && k0_leq(dm, db) && k0_leq(dn, da);
    if (conserved) {
        long exp = hom_dim(m, b) + hom_dim(b, a) + hom_dim(a, n);
        if (ipow_checked(field_.q, exp, limits_.max_gamma_triples) > limits_.max_gamma_triples)
            throw CapacityError("gamma: candidate triple count exceeds the configured ceiling");
        const auto& fs = hom_elements(m, b);
        const auto& gs = hom_elements(b, a);
        const auto& hs = hom_elements(a, n);
        int nv = quiver_.num_vertices();
        long count = 0;
        for (const RepMap& f : fs) {
            bool finj = true;
            for (int v = 0; v < nv && finj; ++v)
                if (mat_rank(field_, f[v]) != dm[v]) finj = false;
            if (!finj) continue;
            for (const RepMap& g : gs) {
                bool ok = true;
                for (int v = 0; v < nv && ok; ++v) {
                    if (mat_rank(field_, g[v]) != db[v] - dm[v]) { ok = false; break; }
                    FqMat gf = mat_mul(field_, g[v], f[v]);
                    for (auto x : gf.a)
                        if (x) { ok = false; break; }
                }
                if (!ok) continue;
                for (const RepMap& h : hs) {
                    bool ok2 = true;
                    for (int v = 0; v < nv && ok2; ++v) {
                        if (mat_rank(field_, h[v]) != dn[v]) { ok2 = false; break; }
                        FqMat hg = mat_mul(field_, h[v], g[v]);
                        for (auto x : hg.a)
                            if (x) { ok2 = false; break; }
                    }
                    if (ok2) ++count;
                }
            }
        }
        result = Rat(count) / (Rat(aut_count(a)) * Rat(aut_count(b)));
        result.canonicalize();
    }
    std::lock_guard<std::mutex> lk(memo_mutex_);
    return gamma_memo_[{a, b, m, n}] = result;
}

Rat Backend::gamma_factorized(ClassId a, ClassId b, ClassId m, ClassId n) {
    // gamma = (a_M a_N / (a_A a_B)) * sum_X g^B_{X,M} g^A_{N,X} a_X, the sum
    // over the image object X of the middle map.
    Rat sum(0);
    for (ClassId x = 0; x < num_bounded_; ++x) {
        long gbm = hall_number(x, m, b);
        if (!gbm) continue;
        long gan = hall_number(n, x, a);
        if (!gan) continue;
        sum += Rat(gbm) * Rat(gan) * Rat(aut_count(x));
    }
    Rat r = sum * Rat(aut_count(m)) * Rat(aut_count(n)) /
            (Rat(aut_count(a)) * Rat(aut_count(b)));
    r.canonicalize();
    return r;
}

// --- cache ------------------------------------------------------------------

void Backend::save_cache(const std::string& path) const {
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["digest"] = digest_;
    j["bound"] = bound_;
    std::lock_guard<std::mutex> lk(memo_mutex_);
    auto& recs = j["records"];
    recs = nlohmann::ordered_json::array();
    for (auto& [k, v] : hom_memo_)
        recs.push_back({{"kind", "hom"}, {"key", {k.first, k.second}}, {"value", v}});
    for (auto& [k, v] : aut_memo_) recs.push_back({{"kind", "aut"}, {"key", {k}}, {"value", v}});
    for (auto& [c, table] : sub_table_memo_)
        for (auto& [ab, g] : table)
            recs.push_back({{"kind", "hall"}, {"key", {ab.first, ab.second, c}}, {"value", g}});
    for (auto& [k, v] : gamma_memo_)
        recs.push_back(
            {{"kind", "gamma"}, {"key", {k[0], k[1], k[2], k[3]}}, {"value", rat_str(v)}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    out << j.dump(1) << "\n";
}

bool Backend::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (...) {
        return false;
    }
    if (!j.is_object() || j.value("format_version", 0) != 1 || j.value("digest", "") != digest_ ||
        j.value("bound", K0{}) != bound_)
        return false;
    std::lock_guard<std::mutex> lk(memo_mutex_);
    for (auto& rec : j["records"]) {
        std::string kind = rec.value("kind", "");
        auto& key = rec["key"];
        if (kind == "hom")
            hom_memo_[{key[0], key[1]}] = rec["value"].get<long>();
        else if (kind == "aut")
            aut_memo_[key[0].get<int>()] = rec["value"].get<long>();
        else if (kind == "hall")
            sub_table_memo_[key[2].get<int>()][{key[0].get<int>(), key[1].get<int>()}] =
                rec["value"].get<long>();
        else if (kind == "gamma")
            gamma_memo_[{key[0].get<int>(), key[1].get<int>(), key[2].get<int>(),
                         key[3].get<int>()}] = Rat(parse_rat(rec["value"].get<std::string>()));
    }
    return true;
}

}  // namespace hall
