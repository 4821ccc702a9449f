#pragma once

// One rule table per algebra presentation.  A table consists of a same-degree
// object merge, a kappa merge, scalar commutation rules, and the sum-producing
// adjacent-degree swap; the straightening engine consumes it unchanged.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hall/backend.hpp"
#include "hall/element.hpp"

namespace hall {

struct KindError : std::invalid_argument {
    explicit KindError(const std::string& what) : std::invalid_argument(what) {}
};

enum class AlgebraId {
    HTwE,     // extended twisted Ringel-Hall algebra
    MHPlain,  // modified Ringel-Hall algebra
    MHCtw,    // componentwise twisted modified
    MHTw,     // twisted modified
    MHRtw,    // relative twisted modified
    DH,       // derived Hall algebra
    DHTw,     // twisted derived Hall algebra
    DHCeTw,   // completely extended twisted derived
    LStar,    // Drinfeld dual lattice algebra
    NNaive,   // naive lattice algebra
};

const char* algebra_cli_name(AlgebraId id);
std::optional<AlgebraId> algebra_from_cli_name(const std::string& name);
std::vector<AlgebraId> all_algebras();

struct AdjacentTerm {
    TwistScalar coeff;
    Word word;  // replacement for the two swapped letters, possibly with a kappa letter
};

struct AlgebraSpec {
    AlgebraId id;
    std::string name;
    Backend* backend = nullptr;

    GenKind object_kind = GenKind::U;
    std::string object_symbol = "U";
    bool has_kappa = true;
    GenKind kappa_kind = GenKind::KappaGraded;
    bool kappa_left = true;           // normal position of kappa letters
    bool object_single_degree = false;  // objects admitted at degree 0 only

    // x.y at the same degree -> sum of single object letters
    std::function<std::vector<std::pair<ClassId, TwistScalar>>(ClassId, ClassId)> merge_objects;
    // K_a K_b (same degree / both plain) -> coeff * K_{a+b}
    std::function<TwistScalar(const K0&, const K0&)> kappa_merge;
    // kappa_left: obj.kappa = c * kappa.obj; kappa_right: kappa.obj = c * obj.kappa
    std::function<TwistScalar(ClassId obj, long obj_deg, const K0& alpha, long kappa_deg)>
        obj_kappa_swap;
    // K_{alpha,lo} K_{beta,hi} = c * K_{beta,hi} K_{alpha,lo}, hi > lo
    std::function<TwistScalar(const K0& alpha, long lo, const K0& beta, long hi)> kappa_kappa_swap;
    // obj_{B,n} obj_{A,m} = c * obj_{A,m} obj_{B,n}, m >= n+2
    std::function<TwistScalar(ClassId b, long n, ClassId a, long m)> far_swap;
    // obj_{B,n} obj_{A,n+1} -> sum of replacement words
    std::function<std::vector<AdjacentTerm>(ClassId b, ClassId a, long n)> adjacent_rule;

    long q() const { return backend->q(); }
    bool admits(const Generator& g) const;
    void require_admissible(const Generator& g) const;
};

AlgebraSpec make_spec(AlgebraId id, Backend& backend);
// Negative control: same table with the object-merge twist deliberately
// rescaled by q; its relation suite must fail.
AlgebraSpec make_mutated_spec(AlgebraId id, Backend& backend);

// Componentwise Euler form sqrt(prod_i <M^i, N^i>) on generator pairs; the
// acyclic K_{alpha,m} contributes alpha in degrees m-1 and m.
TwistScalar cw_euler(Backend& b, const Generator& x, const Generator& y);
// Relative Euler form sqrt(prod_{i,j} <M^i, N^j>^{(-1)^{j-i+1}(j-i+1)}).
TwistScalar rel_euler(Backend& b, const Generator& x, const Generator& y);
// Euler form of the category of bounded complexes on generator pairs:
// prod_{i<=j} <M^i, N^j>^{(-1)^{j-i}}.
TwistScalar complex_euler(Backend& b, const Generator& x, const Generator& y);

}  // namespace hall
