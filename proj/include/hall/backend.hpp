#pragma once

// The concrete finitary hereditary abelian category: representations of an
// acyclic quiver over F_q up to a dimension bound, with exact brute-force
// counting of Hom/Ext/Aut/Hall/gamma data.  All counting operations are
// memoized; the memo table may be persisted to a JSON cache file.

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hall/k0.hpp"
#include "hall/quiver.hpp"
#include "hall/scalar.hpp"

namespace hall {

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct BackendError : std::logic_error {
    explicit BackendError(const std::string& what) : std::logic_error(what) {}
};

struct BackendLimits {
    uint64_t max_reps_per_dim = 1u << 20;
    uint64_t max_gamma_triples = 1u << 24;
    uint64_t max_cocycles = 1u << 22;
    uint64_t max_end_elements = 1u << 22;
};

using ClassId = int;

class Backend {
public:
    Backend(Quiver quiver, long q, K0 dim_bound, BackendLimits limits = {});

    const Quiver& quiver() const { return quiver_; }
    long q() const { return field_.q; }
    const K0& bound() const { return bound_; }
    std::string digest() const { return digest_; }

    // --- isomorphism classes -------------------------------------------------
    ClassId zero_class() const { return 0; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int num_bounded_classes() const { return num_bounded_; }
    bool in_bound(ClassId c) const { return c < num_bounded_; }
    const K0& dim_vector(ClassId c) const { return classes_[check(c)].dim; }
    const std::string& class_name(ClassId c) const { return classes_[check(c)].name; }
    // Multiset of (indecomposable class id, multiplicity), sorted.
    const std::vector<std::pair<ClassId, int>>& decomposition(ClassId c) const {
        return classes_[check(c)].decomp;
    }
    std::optional<ClassId> class_by_name(const std::string& name) const;
    ClassId direct_sum(ClassId a, ClassId b);
    // Classes with dim vector coordinatewise <= bound, in enumeration order
    // (zero object first).
    std::vector<ClassId> bounded_classes() const;
    bool is_indecomposable(ClassId c) const { return classes_[check(c)].decomp.size() == 1 &&
                                                    classes_[check(c)].decomp[0].second == 1; }

    // --- counting ------------------------------------------------------------
    long hom_dim(ClassId a, ClassId b);
    long ext1_dim(ClassId a, ClassId b);
    long aut_count(ClassId a);
    long euler_exponent(const K0& alpha, const K0& beta) const;
    long symmetrized_exponent(const K0& alpha, const K0& beta) const;
    // g^C_{AB}: subobjects of C isomorphic to B with quotient isomorphic to A.
    long hall_number(ClassId a, ClassId b, ClassId c);
    // |Ext^1(A,B)_C| via the Riedtmann-Peng formula.
    long ext_with_middle(ClassId a, ClassId b, ClassId c);
    // |Ext^1(A,B)_C| by direct cocycle enumeration (independent oracle).
    long ext_with_middle_direct(ClassId a, ClassId b, ClassId c);
    // |Ext^1(A,B)_C| / |Hom(A,B)| as an exact rational.
    Rat hall_coeff(ClassId a, ClassId b, ClassId c);
    // gamma^{MN}_{AB} = |V(M,B,A,N)| / (a_A a_B) by brute-force enumeration of
    // exact sequences 0 -> M -> B -> A -> N -> 0.
    Rat gamma(ClassId a, ClassId b, ClassId m, ClassId n);
    // Same quantity through the image-object factorization; independent of the
    // triple enumeration.
    Rat gamma_factorized(ClassId a, ClassId b, ClassId m, ClassId n);

    // Representative representation (block sum of indecomposables).
    const Rep& class_rep(ClassId c);
    ClassId identify(const Rep& r);

    // --- cache ---------------------------------------------------------------
    void save_cache(const std::string& path) const;
    // Returns false (and leaves the memo untouched) if the file is missing or
    // belongs to a different (quiver, q, bound) triple.
    bool load_cache(const std::string& path);

private:
    struct ClassInfo {
        std::vector<std::pair<ClassId, int>> decomp;  // empty for the zero object
        K0 dim;
        std::string name;
        bool has_rep = false;
        Rep rep;
    };

    ClassId check(ClassId c) const {
        if (c < 0 || c >= static_cast<ClassId>(classes_.size()))
            throw BackendError("class id out of range");
        return c;
    }

    void enumerate_classes();
    void discover_indecomposables();
    ClassId class_of_decomp(std::vector<std::pair<ClassId, int>> decomp);
    std::string name_of_decomp(const std::vector<std::pair<ClassId, int>>& decomp) const;
    bool reps_isomorphic(const Rep& x, const Rep& y);
    // Splits off one indecomposable summand multiset; appends to `out`.
    void decompose_rep(const Rep& r, std::map<ClassId, int>& out);
    std::optional<RepMap> find_nontrivial_idempotent(const Rep& r);
    ClassId identify_indecomposable(const Rep& r);

    const std::map<std::pair<ClassId, ClassId>, long>& subobject_table(ClassId c);
    const std::map<ClassId, long>& ext_middle_distribution(ClassId a, ClassId b);

    const std::vector<RepMap>& hom_elements(ClassId a, ClassId b);

    Quiver quiver_;
    Fq field_;
    K0 bound_;
    BackendLimits limits_;
    std::string digest_;

    std::vector<ClassInfo> classes_;
    int num_bounded_ = 0;
    std::vector<ClassId> indec_ids_;  // discovery order
    std::map<std::vector<std::pair<ClassId, int>>, ClassId> decomp_index_;
    std::map<std::string, ClassId> name_index_;

    mutable std::mutex memo_mutex_;
    std::map<std::pair<ClassId, ClassId>, long> hom_memo_;
    std::map<ClassId, long> aut_memo_;
    std::map<ClassId, std::map<std::pair<ClassId, ClassId>, long>> sub_table_memo_;
    std::map<std::pair<ClassId, ClassId>, std::map<ClassId, long>> ext_direct_memo_;
    std::map<std::array<ClassId, 4>, Rat> gamma_memo_;
    std::map<std::pair<ClassId, ClassId>, std::vector<RepMap>> hom_elems_memo_;
};

}  // namespace hall
