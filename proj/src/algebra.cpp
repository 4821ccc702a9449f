#include "hall/algebra.hpp"

#include <algorithm>

namespace hall {

namespace {

struct CliName {
    AlgebraId id;
    const char* name;
};

constexpr CliName kNames[] = {
    {AlgebraId::HTwE, "h-tw-e"},   {AlgebraId::MHPlain, "mh"},     {AlgebraId::MHCtw, "mh-ctw"},
    {AlgebraId::MHTw, "mh-tw"},    {AlgebraId::MHRtw, "mh-rtw"},   {AlgebraId::DH, "dh"},
    {AlgebraId::DHTw, "dh-tw"},    {AlgebraId::DHCeTw, "dh-ce-tw"}, {AlgebraId::LStar, "lattice"},
    {AlgebraId::NNaive, "naive"},
};

// Component profile of a graded generator: (degree, K0 class) pairs.
std::vector<std::pair<long, K0>> components(Backend& b, const Generator& g) {
    if (g.is_object()) return {{g.degree, b.dim_vector(g.cls)}};
    if (g.kind == GenKind::KappaGraded) return {{g.degree - 1, g.k0}, {g.degree, g.k0}};
    throw KindError("plain kappa letters have no graded component profile");
}

}  // namespace

const char* algebra_cli_name(AlgebraId id) {
    for (auto& n : kNames)
        if (n.id == id) return n.name;
    throw std::logic_error("unknown algebra id");
}

std::optional<AlgebraId> algebra_from_cli_name(const std::string& name) {
    for (auto& n : kNames)
        if (name == n.name) return n.id;
    return std::nullopt;
}

std::vector<AlgebraId> all_algebras() {
    std::vector<AlgebraId> out;
    for (auto& n : kNames) out.push_back(n.id);
    return out;
}

TwistScalar cw_euler(Backend& b, const Generator& x, const Generator& y) {
    long exp = 0;
    for (auto& [dx, kx] : components(b, x))
        for (auto& [dy, ky] : components(b, y))
            if (dx == dy) exp += b.euler_exponent(kx, ky);
    return TwistScalar::v_power(b.q(), exp);
}

TwistScalar rel_euler(Backend& b, const Generator& x, const Generator& y) {
    long exp = 0;
    for (auto& [dx, kx] : components(b, x))
        for (auto& [dy, ky] : components(b, y)) {
            long d = dy - dx;
            long sign = (d + 1) % 2 == 0 ? 1 : -1;
            exp += b.euler_exponent(kx, ky) * sign * (d + 1);
        }
    return TwistScalar::v_power(b.q(), exp);
}

TwistScalar complex_euler(Backend& b, const Generator& x, const Generator& y) {
    long exp = 0;
    for (auto& [dx, kx] : components(b, x))
        for (auto& [dy, ky] : components(b, y)) {
            long d = dy - dx;
            if (d < 0) continue;
            exp += b.euler_exponent(kx, ky) * (d % 2 == 0 ? 1 : -1);
        }
    return TwistScalar::v_power(b.q(), 2 * exp);
}

bool AlgebraSpec::admits(const Generator& g) const {
    if (g.is_object()) {
        if (g.kind != object_kind) return false;
        if (object_single_degree && g.degree != 0) return false;
        return true;
    }
    return has_kappa && g.kind == kappa_kind;
}

void AlgebraSpec::require_admissible(const Generator& g) const {
    if (!admits(g))
        throw KindError("generator kind not admitted by algebra '" + name + "'");
}

namespace {

enum class KappaInGamma { None, Graded, PlainSigned };

AlgebraSpec build_spec(AlgebraId id, Backend& backend) {
    AlgebraSpec s;
    s.id = id;
    s.name = algebra_cli_name(id);
    s.backend = &backend;
    Backend* b = &backend;
    long q = backend.q();
    auto vp = [q](long k) { return TwistScalar::v_power(q, k); };
    auto one = [q]() { return TwistScalar::one(q); };

    switch (id) {
        case AlgebraId::HTwE:
            s.object_kind = GenKind::U;
            s.object_symbol = "U";
            s.kappa_kind = GenKind::KappaPlain;
            s.kappa_left = false;  // basis words are [B] * k_alpha
            s.object_single_degree = true;
            break;
        case AlgebraId::MHPlain:
        case AlgebraId::MHCtw:
        case AlgebraId::MHTw:
        case AlgebraId::MHRtw:
            s.object_kind = GenKind::U;
            s.object_symbol = "U";
            s.kappa_kind = GenKind::KappaGraded;
            break;
        case AlgebraId::NNaive:
            s.object_kind = GenKind::U;
            s.object_symbol = "Y";
            s.kappa_kind = GenKind::KappaGraded;
            break;
        case AlgebraId::DH:
        case AlgebraId::DHTw:
            s.object_kind = GenKind::Z;
            s.object_symbol = "Z";
            s.has_kappa = false;
            break;
        case AlgebraId::DHCeTw:
            s.object_kind = GenKind::Z;
            s.object_symbol = "Z";
            s.kappa_kind = GenKind::KappaGraded;
            break;
        case AlgebraId::LStar:
            s.object_kind = GenKind::Z;
            s.object_symbol = "Z";
            s.kappa_kind = GenKind::KappaPlain;
            break;
    }

    // Same-degree Hall merge, twisted by <A,B>^(merge_exp/2).
    long merge_exp = 0;  // exponent of v on e(A,B)
    switch (id) {
        case AlgebraId::MHPlain:
        case AlgebraId::DH: merge_exp = 0; break;
        case AlgebraId::MHTw: merge_exp = 2; break;
        default: merge_exp = 1; break;
    }
    s.merge_objects = [b, vp, merge_exp](ClassId x, ClassId y) {
        K0 target = k0_add(b->dim_vector(x), b->dim_vector(y));
        if (!k0_leq(target, b->bound()))
            throw CapacityError("Hall merge: middle-term dimension " + k0_str(target) +
                                " exceeds the enumeration bound");
        TwistScalar twist =
            vp(merge_exp * b->euler_exponent(b->dim_vector(x), b->dim_vector(y)));
        std::vector<std::pair<ClassId, TwistScalar>> out;
        for (ClassId c = 0; c < b->num_bounded_classes(); ++c) {
            if (b->dim_vector(c) != target) continue;
            Rat hc = b->hall_coeff(x, y, c);
            if (hc == 0) continue;
            out.emplace_back(c, twist * TwistScalar::from_rat(b->q(), hc));
        }
        return out;
    };

    s.kappa_merge = (id == AlgebraId::MHPlain)
                        ? std::function<TwistScalar(const K0&, const K0&)>(
                              [b, vp](const K0& a, const K0& g) {
                                  return vp(-2 * b->euler_exponent(a, g));
                              })
                        : [one](const K0&, const K0&) { return one(); };

    switch (id) {
        case AlgebraId::HTwE:
            // kappa moves right: k_a [B] = sqrt((a, B)) [B] k_a
            s.obj_kappa_swap = [b, vp](ClassId obj, long, const K0& alpha, long) {
                return vp(b->symmetrized_exponent(alpha, b->dim_vector(obj)));
            };
            break;
        case AlgebraId::MHPlain:
            s.obj_kappa_swap = [b, vp](ClassId obj, long n, const K0& alpha, long k) {
                if (k == n) return vp(-2 * b->euler_exponent(b->dim_vector(obj), alpha));
                if (k == n + 1) return vp(2 * b->euler_exponent(alpha, b->dim_vector(obj)));
                return vp(0);
            };
            break;
        case AlgebraId::MHCtw:
        case AlgebraId::NNaive:
            s.obj_kappa_swap = [b, vp](ClassId obj, long n, const K0& alpha, long k) {
                if (k == n) return vp(-b->symmetrized_exponent(alpha, b->dim_vector(obj)));
                if (k == n + 1) return vp(b->symmetrized_exponent(alpha, b->dim_vector(obj)));
                return vp(0);
            };
            break;
        case AlgebraId::MHTw:
            s.obj_kappa_swap = [vp](ClassId, long, const K0&, long) { return vp(0); };
            break;
        case AlgebraId::MHRtw:
            s.obj_kappa_swap = [b, vp](ClassId obj, long n, const K0& alpha, long k) {
                long sign = ((n - k) % 2 == 0) ? 1 : -1;
                return vp(-sign * b->symmetrized_exponent(alpha, b->dim_vector(obj)));
            };
            break;
        case AlgebraId::DHCeTw:
            s.obj_kappa_swap = [b, vp](ClassId obj, long n, const K0& alpha, long k) {
                long sym = b->symmetrized_exponent(alpha, b->dim_vector(obj));
                if (k == n) return vp((n == 0 || n == 1) ? -sym : 0);
                if (k == n + 1) return vp((n == 0 || n == -1) ? sym : 0);
                if (k == n - 1) return vp((k == 0 || k == 1) ? sym : 0);
                long msign = (n % 2 == 0) ? 1 : -1;
                if (k == 0) return vp(-msign * sym);
                if (k == 1) return vp(msign * sym);
                return vp(0);
            };
            break;
        case AlgebraId::LStar:
            s.obj_kappa_swap = [b, vp](ClassId obj, long n, const K0& alpha, long) {
                long sign = (n % 2 == 0) ? 1 : -1;
                return vp(-sign * b->symmetrized_exponent(b->dim_vector(obj), alpha));
            };
            break;
        default:  // DH, DHTw carry no kappa letters
            s.obj_kappa_swap = [vp](ClassId, long, const K0&, long) { return vp(0); };
            break;
    }

    if (id == AlgebraId::MHCtw || id == AlgebraId::NNaive || id == AlgebraId::DHCeTw) {
        s.kappa_kappa_swap = [b, vp](const K0& alpha, long lo, const K0& beta, long hi) {
            return hi == lo + 1 ? vp(b->symmetrized_exponent(alpha, beta)) : vp(0);
        };
    } else if (id == AlgebraId::MHPlain) {
        s.kappa_kappa_swap = [b, vp](const K0& alpha, long lo, const K0& beta, long hi) {
            return hi == lo + 1 ? vp(2 * b->euler_exponent(beta, alpha)) : vp(0);
        };
    } else {
        s.kappa_kappa_swap = [vp](const K0&, long, const K0&, long) { return vp(0); };
    }

    switch (id) {
        case AlgebraId::MHTw:
            s.far_swap = [b, vp](ClassId lo, long n, ClassId hi, long m) {
                long sign = ((m - n) % 2 == 0) ? 1 : -1;
                return vp(2 * sign * b->euler_exponent(b->dim_vector(lo), b->dim_vector(hi)));
            };
            break;
        case AlgebraId::MHRtw:
        case AlgebraId::LStar:
            s.far_swap = [b, vp](ClassId lo, long n, ClassId hi, long m) {
                long d = m - n;
                long sign = (d % 2 == 0) ? 1 : -1;
                return vp(sign * (1 - d) *
                          b->symmetrized_exponent(b->dim_vector(hi), b->dim_vector(lo)));
            };
            break;
        case AlgebraId::DH:
            s.far_swap = [b, vp](ClassId lo, long n, ClassId hi, long m) {
                long sign = ((m - n) % 2 == 0) ? 1 : -1;
                return vp(2 * sign * b->euler_exponent(b->dim_vector(hi), b->dim_vector(lo)));
            };
            break;
        case AlgebraId::DHTw:
        case AlgebraId::DHCeTw:
            s.far_swap = [b, vp](ClassId lo, long n, ClassId hi, long m) {
                long sign = ((m - n) % 2 == 0) ? 1 : -1;
                return vp(sign * b->symmetrized_exponent(b->dim_vector(hi), b->dim_vector(lo)));
            };
            break;
        default:  // MHPlain, MHCtw, NNaive commute at distance >= 2; HTwE never sees one
            s.far_swap = [vp](ClassId, long, ClassId, long) { return vp(0); };
            break;
    }

    KappaInGamma kg;
    switch (id) {
        case AlgebraId::DH:
        case AlgebraId::DHTw:
        case AlgebraId::DHCeTw: kg = KappaInGamma::None; break;
        case AlgebraId::LStar: kg = KappaInGamma::PlainSigned; break;
        default: kg = KappaInGamma::Graded; break;
    }
    GenKind obj_kind = s.object_kind;
    std::function<TwistScalar(const K0&, const K0&, const K0&, const K0&)> lambda;
    switch (id) {
        case AlgebraId::MHPlain:
            lambda = [b, vp](const K0& dB, const K0&, const K0& dM, const K0&) {
                return vp(2 * b->euler_exponent(k0_sub(dB, dM), dM));
            };
            break;
        case AlgebraId::MHTw:
            lambda = [b, vp](const K0& dB, const K0& dA, const K0&, const K0&) {
                return vp(-2 * b->euler_exponent(dB, dA));
            };
            break;
        case AlgebraId::DH:
            lambda = [b, vp](const K0&, const K0&, const K0& dM, const K0& dN) {
                return vp(-2 * b->euler_exponent(dN, dM));
            };
            break;
        case AlgebraId::DHTw:
        case AlgebraId::DHCeTw:
            lambda = [b, vp](const K0& dB, const K0& dA, const K0& dM, const K0& dN) {
                return vp(-b->euler_exponent(dB, dA) - b->euler_exponent(dN, dM));
            };
            break;
        default:  // MHCtw, MHRtw, NNaive, LStar: sqrt<M-N, M-B>
            lambda = [b, vp](const K0& dB, const K0&, const K0& dM, const K0& dN) {
                return vp(b->euler_exponent(k0_sub(dM, dN), k0_sub(dM, dB)));
            };
            break;
    }
    if (id == AlgebraId::HTwE) {
        s.adjacent_rule = nullptr;  // single degree, never triggered
    } else {
        s.adjacent_rule = [b, q, kg, obj_kind, lambda](ClassId B, ClassId A, long n) {
            std::vector<AdjacentTerm> out;
            const K0 dB = b->dim_vector(B);
            const K0 dA = b->dim_vector(A);
            for (ClassId M = 0; M < b->num_bounded_classes(); ++M) {
                if (!k0_leq(b->dim_vector(M), dB)) continue;
                K0 kappa_class = k0_sub(dB, b->dim_vector(M));
                for (ClassId N = 0; N < b->num_bounded_classes(); ++N) {
                    if (!k0_leq(b->dim_vector(N), dA)) continue;
                    if (k0_sub(dA, b->dim_vector(N)) != kappa_class) continue;
                    Rat g = b->gamma(A, B, M, N);
                    if (g == 0) continue;
                    Rat ratio = g * Rat(b->aut_count(A)) * Rat(b->aut_count(B)) /
                                (Rat(b->aut_count(M)) * Rat(b->aut_count(N)));
                    ratio.canonicalize();
                    AdjacentTerm term;
                    term.coeff = TwistScalar::from_rat(q, ratio) *
                                 lambda(dB, dA, b->dim_vector(M), b->dim_vector(N));
                    if (N != 0) term.word.push_back(Generator::object(obj_kind, N, n + 1));
                    if (M != 0) term.word.push_back(Generator::object(obj_kind, M, n));
                    if (kg == KappaInGamma::Graded && !k0_is_zero(kappa_class))
                        term.word.push_back(Generator::kappa(kappa_class, n + 1));
                    else if (kg == KappaInGamma::PlainSigned && !k0_is_zero(kappa_class)) {
                        K0 signed_class =
                            (n + 1) % 2 == 0 ? kappa_class : k0_neg(kappa_class);
                        term.word.push_back(Generator::kappa_plain(signed_class));
                    }
                    out.push_back(std::move(term));
                }
            }
            return out;
        };
    }
    return s;
}

}  // namespace

AlgebraSpec make_spec(AlgebraId id, Backend& backend) { return build_spec(id, backend); }

AlgebraSpec make_mutated_spec(AlgebraId id, Backend& backend) {
    AlgebraSpec s = build_spec(id, backend);
    s.name += "!mutated";
    auto inner = s.merge_objects;
    long q = backend.q();
    s.merge_objects = [inner, q](ClassId a, ClassId b) {
        auto out = inner(a, b);
        for (auto& [c, coeff] : out) coeff *= TwistScalar::v_power(q, 2);
        return out;
    };
    return s;
}

}  // namespace hall
