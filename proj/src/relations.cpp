#include "hall/relations.hpp"

namespace hall {

namespace {

struct Ctx {
    const AlgebraSpec& spec;
    Backend& b;
    RelWindow win;
    long q;

    TwistScalar vp(long k) const { return TwistScalar::v_power(q, k); }
    TwistScalar one() const { return TwistScalar::one(q); }
    Generator obj(ClassId c, long n) const { return Generator::object(spec.object_kind, c, n); }

    std::vector<ClassId> objects() const {  // nonzero classes within the bound
        std::vector<ClassId> out;
        for (ClassId c = 1; c < b.num_bounded_classes(); ++c) out.push_back(c);
        return out;
    }
    std::vector<long> degrees() const {
        std::vector<long> out;
        for (long n = win.deg_lo; n <= win.deg_hi; ++n) out.push_back(n);
        return out;
    }
    std::string cls(ClassId c) const { return b.class_name(c); }
};

std::string deg_str(long n) { return std::to_string(n); }

// gamma_{AB}^{MN} * a_A a_B / (a_M a_N) as an exact scalar.
TwistScalar gamma_ratio(Ctx& cx, ClassId a, ClassId bb, ClassId m, ClassId n) {
    Rat g = cx.b.gamma(a, bb, m, n);
    if (g == 0) return TwistScalar::zero(cx.q);
    Rat r = g * Rat(cx.b.aut_count(a)) * Rat(cx.b.aut_count(bb)) /
            (Rat(cx.b.aut_count(m)) * Rat(cx.b.aut_count(n)));
    r.canonicalize();
    return TwistScalar::from_rat(cx.q, r);
}

// Conserving (M, N) pairs for the adjacent-degree relation of (B at n, A at n+1).
std::vector<std::pair<ClassId, ClassId>> conserving_pairs(Ctx& cx, ClassId bb, ClassId a) {
    std::vector<std::pair<ClassId, ClassId>> out;
    const K0& dB = cx.b.dim_vector(bb);
    const K0& dA = cx.b.dim_vector(a);
    for (ClassId m = 0; m < cx.b.num_bounded_classes(); ++m) {
        if (!k0_leq(cx.b.dim_vector(m), dB)) continue;
        K0 delta = k0_sub(dB, cx.b.dim_vector(m));
        for (ClassId n = 0; n < cx.b.num_bounded_classes(); ++n) {
            if (!k0_leq(cx.b.dim_vector(n), dA)) continue;
            if (k0_sub(dA, cx.b.dim_vector(n)) == delta) out.emplace_back(m, n);
        }
    }
    return out;
}

// Same-degree Hall merge family; twist_exp is the v-exponent multiplier on the
// Euler form (0 plain, 1 square root, 2 full).
RelFamily merge_family(Ctx& cx, long twist_exp) {
    RelFamily fam{"same-degree-merge", {}};
    for (ClassId a : cx.objects())
        for (ClassId bb : cx.objects()) {
            K0 total = k0_add(cx.b.dim_vector(a), cx.b.dim_vector(bb));
            if (!k0_leq(total, cx.b.bound())) continue;
            TwistScalar twist =
                cx.vp(twist_exp * cx.b.euler_exponent(cx.b.dim_vector(a), cx.b.dim_vector(bb)));
            for (long n : cx.degrees()) {
                if (cx.spec.object_single_degree && n != 0) continue;
                RelInstance inst;
                inst.label = "[" + cx.cls(a) + "," + deg_str(n) + "]*[" + cx.cls(bb) + "," +
                             deg_str(n) + "]";
                inst.lhs = {cx.obj(a, n), cx.obj(bb, n)};
                for (ClassId c = 0; c < cx.b.num_bounded_classes(); ++c) {
                    if (cx.b.dim_vector(c) != total) continue;
                    Rat hc = cx.b.hall_coeff(a, bb, c);
                    if (hc == 0) continue;
                    inst.rhs.push_back(
                        {twist * TwistScalar::from_rat(cx.q, hc), {cx.obj(c, n)}});
                }
                fam.instances.push_back(std::move(inst));
            }
        }
    return fam;
}

using ScalarFn = std::function<TwistScalar(Ctx&, const K0&, ClassId, long, long)>;

// K_{alpha,m} obj_{A,n} = scalar * obj_{A,n} K_{alpha,m} over the given degree
// offsets (kappa degree m = n + off).
RelFamily kappa_obj_family(Ctx& cx, const std::string& name, const std::vector<long>& offsets,
                           const ScalarFn& scalar) {
    RelFamily fam{name, {}};
    auto grid = kappa_grid(cx.b, cx.win.grid_radius);
    for (const K0& alpha : grid)
        for (ClassId a : cx.objects())
            for (long n : cx.degrees()) {
                if (cx.spec.object_single_degree && n != 0) continue;
                for (long off : offsets) {
                    long m = n + off;
                    if (m < cx.win.deg_lo || m > cx.win.deg_hi) continue;
                    TwistScalar c = scalar(cx, alpha, a, n, m);
                    RelInstance inst;
                    inst.label = "K[" + k0_str(alpha) + "," + deg_str(m) + "]*[" + cx.cls(a) + "," +
                                 deg_str(n) + "]";
                    inst.lhs = {Generator::kappa(alpha, m), cx.obj(a, n)};
                    inst.rhs = {{c, {cx.obj(a, n), Generator::kappa(alpha, m)}}};
                    fam.instances.push_back(std::move(inst));
                }
            }
    return fam;
}

RelFamily kappa_merge_family(Ctx& cx, const std::string& name,
                             std::function<TwistScalar(Ctx&, const K0&, const K0&)> coeff,
                             bool plain) {
    RelFamily fam{name, {}};
    auto grid = kappa_grid(cx.b, cx.win.grid_radius);
    std::vector<long> degs = plain ? std::vector<long>{0} : cx.degrees();
    for (const K0& alpha : grid)
        for (const K0& beta : grid)
            for (long n : degs) {
                RelInstance inst;
                inst.label = "K[" + k0_str(alpha) + "]*K[" + k0_str(beta) + "]@" + deg_str(n);
                K0 sum = k0_add(alpha, beta);
                Word merged;
                if (!k0_is_zero(sum))
                    merged = {plain ? Generator::kappa_plain(sum) : Generator::kappa(sum, n)};
                inst.lhs = plain ? Word{Generator::kappa_plain(alpha), Generator::kappa_plain(beta)}
                                 : Word{Generator::kappa(alpha, n), Generator::kappa(beta, n)};
                inst.rhs = {{coeff(cx, alpha, beta), merged}};
                fam.instances.push_back(std::move(inst));
            }
    return fam;
}

RelFamily kappa_kappa_swap_family(Ctx& cx, const std::string& name,
                                  const std::vector<long>& offsets,
                                  std::function<TwistScalar(Ctx&, const K0&, const K0&, long, long)>
                                      scalar) {
    RelFamily fam{name, {}};
    auto grid = kappa_grid(cx.b, cx.win.grid_radius);
    for (const K0& alpha : grid)
        for (const K0& beta : grid)
            for (long n : cx.degrees())
                for (long off : offsets) {
                    long m = n + off;
                    if (m < cx.win.deg_lo || m > cx.win.deg_hi) continue;
                    RelInstance inst;
                    inst.label = "K[" + k0_str(alpha) + "," + deg_str(n) + "]*K[" + k0_str(beta) +
                                 "," + deg_str(m) + "]";
                    inst.lhs = {Generator::kappa(alpha, n), Generator::kappa(beta, m)};
                    inst.rhs = {{scalar(cx, alpha, beta, n, m),
                                 {Generator::kappa(beta, m), Generator::kappa(alpha, n)}}};
                    fam.instances.push_back(std::move(inst));
                }
    return fam;
}

// obj_{B,n} obj_{A,m} = scalar * obj_{A,m} obj_{B,n} for the given offsets.
RelFamily far_family(Ctx& cx, const std::string& name, const std::vector<long>& offsets,
                     std::function<TwistScalar(Ctx&, ClassId, ClassId, long, long)> scalar) {
    RelFamily fam{name, {}};
    for (ClassId bb : cx.objects())
        for (ClassId a : cx.objects())
            for (long n : cx.degrees())
                for (long off : offsets) {
                    long m = n + off;
                    if (m < cx.win.deg_lo || m > cx.win.deg_hi) continue;
                    RelInstance inst;
                    inst.label = "[" + cx.cls(bb) + "," + deg_str(n) + "]*[" + cx.cls(a) + "," +
                                 deg_str(m) + "]";
                    inst.lhs = {cx.obj(bb, n), cx.obj(a, m)};
                    inst.rhs = {{scalar(cx, bb, a, n, m), {cx.obj(a, m), cx.obj(bb, n)}}};
                    fam.instances.push_back(std::move(inst));
                }
    return fam;
}

enum class GammaKappa { None, GradedLeft, GradedRight, PlainSigned };

RelFamily gamma_family(Ctx& cx, GammaKappa kind,
                       std::function<TwistScalar(Ctx&, ClassId, ClassId, ClassId, ClassId)> twist) {
    RelFamily fam{"adjacent-gamma", {}};
    for (ClassId bb : cx.objects())
        for (ClassId a : cx.objects())
            for (long n : cx.degrees()) {
                if (n + 1 > cx.win.deg_hi) continue;
                RelInstance inst;
                inst.label = "[" + cx.cls(bb) + "," + deg_str(n) + "]*[" + cx.cls(a) + "," +
                             deg_str(n + 1) + "]";
                inst.lhs = {cx.obj(bb, n), cx.obj(a, n + 1)};
                for (auto& [m, nn] : conserving_pairs(cx, bb, a)) {
                    TwistScalar ratio = gamma_ratio(cx, a, bb, m, nn);
                    if (ratio.is_zero()) continue;
                    TwistScalar coeff = ratio * twist(cx, a, bb, m, nn);
                    Word w;
                    K0 delta = k0_sub(cx.b.dim_vector(bb), cx.b.dim_vector(m));
                    if (kind == GammaKappa::GradedLeft && !k0_is_zero(delta))
                        w.push_back(Generator::kappa(delta, n + 1));
                    if (nn != 0) w.push_back(cx.obj(nn, n + 1));
                    if (m != 0) w.push_back(cx.obj(m, n));
                    if (kind == GammaKappa::GradedRight && !k0_is_zero(delta))
                        w.push_back(Generator::kappa(delta, n + 1));
                    if (kind == GammaKappa::PlainSigned && !k0_is_zero(delta))
                        w.push_back(Generator::kappa_plain((n + 1) % 2 == 0 ? delta : k0_neg(delta)));
                    inst.rhs.push_back({coeff, std::move(w)});
                }
                fam.instances.push_back(std::move(inst));
            }
    return fam;
}

std::vector<long> far_offsets(Ctx& cx, bool both_directions) {
    std::vector<long> out;
    long span = cx.win.deg_hi - cx.win.deg_lo;
    for (long off = 2; off <= span; ++off) {
        out.push_back(off);
        if (both_directions) out.push_back(-off);
    }
    return out;
}

}  // namespace

std::vector<K0> kappa_grid(const Backend& b, long radius) {
    int n = b.quiver().num_vertices();
    std::vector<K0> out;
    K0 cur(static_cast<size_t>(n), -radius);
    while (true) {
        if (!k0_is_zero(cur)) out.push_back(cur);
        int i = 0;
        while (i < n && ++cur[i] > radius) cur[i++] = -radius;
        if (i == n) break;
    }
    return out;
}

std::vector<RelFamily> relation_families(const AlgebraSpec& spec, const RelWindow& win) {
    Ctx cx{spec, *spec.backend, win, spec.q()};
    std::vector<RelFamily> fams;
    auto e = [&cx](const K0& x, const K0& y) { return cx.b.euler_exponent(x, y); };
    auto s = [&cx](const K0& x, const K0& y) { return cx.b.symmetrized_exponent(x, y); };
    auto dim = [&cx](ClassId c) -> const K0& { return cx.b.dim_vector(c); };

    switch (spec.id) {
        case AlgebraId::HTwE: {
            fams.push_back(merge_family(cx, 1));
            fams.push_back(kappa_merge_family(
                cx, "kappa-merge",
                [](Ctx& c, const K0&, const K0&) { return c.one(); }, true));
            RelFamily f{"kappa-past-object", {}};
            for (const K0& alpha : kappa_grid(cx.b, win.grid_radius))
                for (ClassId a : cx.objects()) {
                    RelInstance inst;
                    inst.label = "k[" + k0_str(alpha) + "]*[" + cx.cls(a) + "]";
                    inst.lhs = {Generator::kappa_plain(alpha), cx.obj(a, 0)};
                    inst.rhs = {{cx.vp(s(alpha, dim(a))),
                                 {cx.obj(a, 0), Generator::kappa_plain(alpha)}}};
                    f.instances.push_back(std::move(inst));
                }
            fams.push_back(std::move(f));
            break;
        }
        case AlgebraId::MHPlain: {
            fams.push_back(merge_family(cx, 0));
            fams.push_back(kappa_obj_family(cx, "KU-same", {0},
                                            [&](Ctx& c, const K0& al, ClassId a, long, long) {
                                                return c.vp(2 * e(dim(a), al));
                                            }));
            fams.push_back(kappa_merge_family(
                cx, "KK-same",
                [&](Ctx& c, const K0& al, const K0& be) { return c.vp(-2 * e(al, be)); }, false));
            // U_{A,n} K_{alpha,n+1} = <alpha,A> K U, stated with U on the left
            {
                RelFamily f{"UK-up", {}};
                for (const K0& alpha : kappa_grid(cx.b, win.grid_radius))
                    for (ClassId a : cx.objects())
                        for (long n : cx.degrees()) {
                            if (n + 1 > win.deg_hi) continue;
                            RelInstance inst;
                            inst.label = "[" + cx.cls(a) + "," + deg_str(n) + "]*K[" +
                                         k0_str(alpha) + "," + deg_str(n + 1) + "]";
                            inst.lhs = {cx.obj(a, n), Generator::kappa(alpha, n + 1)};
                            inst.rhs = {{cx.vp(2 * e(alpha, dim(a))),
                                         {Generator::kappa(alpha, n + 1), cx.obj(a, n)}}};
                            f.instances.push_back(std::move(inst));
                        }
                fams.push_back(std::move(f));
            }
            fams.push_back(kappa_obj_family(cx, "KU-below", {-1},
                                            [](Ctx& c, const K0&, ClassId, long, long) {
                                                return c.one();
                                            }));
            fams.push_back(kappa_kappa_swap_family(
                cx, "KK-up", {1}, [&](Ctx& c, const K0& al, const K0& be, long, long) {
                    return c.vp(2 * e(be, al));
                }));
            fams.push_back(gamma_family(cx, GammaKappa::GradedLeft,
                                        [&](Ctx& c, ClassId, ClassId bb, ClassId m, ClassId) {
                                            return c.vp(2 * e(k0_sub(dim(bb), dim(m)), dim(m)));
                                        }));
            fams.push_back(far_family(cx, "UU-far", far_offsets(cx, true),
                                      [](Ctx& c, ClassId, ClassId, long, long) { return c.one(); }));
            fams.push_back(kappa_obj_family(cx, "KU-far", far_offsets(cx, true),
                                            [](Ctx& c, const K0&, ClassId, long, long) {
                                                return c.one();
                                            }));
            fams.push_back(kappa_kappa_swap_family(cx, "KK-far", far_offsets(cx, false),
                                                   [](Ctx& c, const K0&, const K0&, long, long) {
                                                       return c.one();
                                                   }));
            break;
        }
        case AlgebraId::MHCtw:
        case AlgebraId::NNaive: {
            fams.push_back(merge_family(cx, 1));
            fams.push_back(kappa_obj_family(cx, "KU-same", {0},
                                            [&](Ctx& c, const K0& al, ClassId a, long, long) {
                                                return c.vp(s(al, dim(a)));
                                            }));
            fams.push_back(kappa_merge_family(
                cx, "KK-same", [](Ctx& c, const K0&, const K0&) { return c.one(); }, false));
            {
                RelFamily f{"UK-up", {}};
                for (const K0& alpha : kappa_grid(cx.b, win.grid_radius))
                    for (ClassId a : cx.objects())
                        for (long n : cx.degrees()) {
                            if (n + 1 > win.deg_hi) continue;
                            RelInstance inst;
                            inst.label = "[" + cx.cls(a) + "," + deg_str(n) + "]*K[" +
                                         k0_str(alpha) + "," + deg_str(n + 1) + "]";
                            inst.lhs = {cx.obj(a, n), Generator::kappa(alpha, n + 1)};
                            inst.rhs = {{cx.vp(s(alpha, dim(a))),
                                         {Generator::kappa(alpha, n + 1), cx.obj(a, n)}}};
                            f.instances.push_back(std::move(inst));
                        }
                fams.push_back(std::move(f));
            }
            fams.push_back(kappa_obj_family(cx, "KU-below", {-1},
                                            [](Ctx& c, const K0&, ClassId, long, long) {
                                                return c.one();
                                            }));
            fams.push_back(kappa_kappa_swap_family(
                cx, "KK-up", {1}, [&](Ctx& c, const K0& al, const K0& be, long, long) {
                    return c.vp(s(al, be));
                }));
            fams.push_back(gamma_family(
                cx, GammaKappa::GradedRight,
                [&](Ctx& c, ClassId a, ClassId bb, ClassId m, ClassId nn) {
                    return c.vp(e(k0_sub(dim(m), dim(nn)), k0_sub(dim(m), dim(bb))));
                }));
            fams.push_back(far_family(cx, "UU-far", far_offsets(cx, true),
                                      [](Ctx& c, ClassId, ClassId, long, long) { return c.one(); }));
            fams.push_back(kappa_obj_family(cx, "KU-far", far_offsets(cx, true),
                                            [](Ctx& c, const K0&, ClassId, long, long) {
                                                return c.one();
                                            }));
            fams.push_back(kappa_kappa_swap_family(cx, "KK-far", far_offsets(cx, false),
                                                   [](Ctx& c, const K0&, const K0&, long, long) {
                                                       return c.one();
                                                   }));
            break;
        }
        case AlgebraId::MHTw: {
            fams.push_back(merge_family(cx, 2));
            fams.push_back(kappa_obj_family(cx, "KU-any", {0, 1, -1},
                                            [](Ctx& c, const K0&, ClassId, long, long) {
                                                return c.one();
                                            }));
            fams.push_back(kappa_merge_family(
                cx, "KK-same", [](Ctx& c, const K0&, const K0&) { return c.one(); }, false));
            fams.push_back(kappa_kappa_swap_family(cx, "KK-any", [&] {
                               auto offs = far_offsets(cx, false);
                               offs.insert(offs.begin(), 1);
                               return offs;
                           }(),
                           [](Ctx& c, const K0&, const K0&, long, long) { return c.one(); }));
            fams.push_back(gamma_family(cx, GammaKappa::GradedRight,
                                        [&](Ctx& c, ClassId a, ClassId bb, ClassId, ClassId) {
                                            return c.vp(-2 * e(dim(bb), dim(a)));
                                        }));
            fams.push_back(far_family(cx, "UU-far", far_offsets(cx, false),
                                      [&](Ctx& c, ClassId bb, ClassId a, long n, long m) {
                                          long sign = ((m - n) % 2 == 0) ? 1 : -1;
                                          return c.vp(2 * sign * e(dim(bb), dim(a)));
                                      }));
            fams.push_back(kappa_obj_family(cx, "KU-far", far_offsets(cx, true),
                                            [](Ctx& c, const K0&, ClassId, long, long) {
                                                return c.one();
                                            }));
            break;
        }
        case AlgebraId::MHRtw: {
            fams.push_back(merge_family(cx, 1));
            fams.push_back(kappa_obj_family(cx, "KU-any", [&] {
                               std::vector<long> offs = {0, 1, -1};
                               for (long off : far_offsets(cx, true)) offs.push_back(off);
                               return offs;
                           }(),
                           [&](Ctx& c, const K0& al, ClassId a, long n, long m) {
                               long sign = ((n - m) % 2 == 0) ? 1 : -1;
                               return c.vp(sign * s(al, dim(a)));
                           }));
            fams.push_back(kappa_merge_family(
                cx, "KK-same", [](Ctx& c, const K0&, const K0&) { return c.one(); }, false));
            fams.push_back(kappa_kappa_swap_family(cx, "KK-any", [&] {
                               auto offs = far_offsets(cx, false);
                               offs.insert(offs.begin(), 1);
                               return offs;
                           }(),
                           [](Ctx& c, const K0&, const K0&, long, long) { return c.one(); }));
            fams.push_back(gamma_family(
                cx, GammaKappa::GradedRight,
                [&](Ctx& c, ClassId a, ClassId bb, ClassId m, ClassId nn) {
                    return c.vp(e(k0_sub(dim(m), dim(nn)), k0_sub(dim(m), dim(bb))));
                }));
            fams.push_back(far_family(cx, "UU-far", far_offsets(cx, false),
                                      [&](Ctx& c, ClassId bb, ClassId a, long n, long m) {
                                          long d = m - n;
                                          long sign = (d % 2 == 0) ? 1 : -1;
                                          return c.vp(sign * (1 - d) * s(dim(a), dim(bb)));
                                      }));
            break;
        }
        case AlgebraId::DH: {
            fams.push_back(merge_family(cx, 0));
            fams.push_back(gamma_family(cx, GammaKappa::None,
                                        [&](Ctx& c, ClassId, ClassId, ClassId m, ClassId nn) {
                                            return c.vp(-2 * e(dim(nn), dim(m)));
                                        }));
            fams.push_back(far_family(cx, "ZZ-far", far_offsets(cx, false),
                                      [&](Ctx& c, ClassId bb, ClassId a, long n, long m) {
                                          long sign = ((m - n) % 2 == 0) ? 1 : -1;
                                          return c.vp(2 * sign * e(dim(a), dim(bb)));
                                      }));
            break;
        }
        case AlgebraId::DHTw:
        case AlgebraId::DHCeTw: {
            fams.push_back(merge_family(cx, 1));
            fams.push_back(gamma_family(cx, GammaKappa::None,
                                        [&](Ctx& c, ClassId a, ClassId bb, ClassId m, ClassId nn) {
                                            return c.vp(-e(dim(bb), dim(a)) - e(dim(nn), dim(m)));
                                        }));
            fams.push_back(far_family(cx, "ZZ-far", far_offsets(cx, false),
                                      [&](Ctx& c, ClassId bb, ClassId a, long n, long m) {
                                          long sign = ((m - n) % 2 == 0) ? 1 : -1;
                                          return c.vp(sign * s(dim(a), dim(bb)));
                                      }));
            if (spec.id == AlgebraId::DHCeTw) {
                fams.push_back(kappa_obj_family(
                    cx, "KZ-same", {0}, [&](Ctx& c, const K0& al, ClassId a, long n, long) {
                        return (n == 0 || n == 1) ? c.vp(s(al, dim(a))) : c.one();
                    }));
                fams.push_back(kappa_merge_family(
                    cx, "KK-same", [](Ctx& c, const K0&, const K0&) { return c.one(); }, false));
                {
                    RelFamily f{"ZK-up", {}};
                    for (const K0& alpha : kappa_grid(cx.b, win.grid_radius))
                        for (ClassId a : cx.objects())
                            for (long n : cx.degrees()) {
                                if (n + 1 > win.deg_hi) continue;
                                RelInstance inst;
                                inst.label = "[" + cx.cls(a) + "," + deg_str(n) + "]*K[" +
                                             k0_str(alpha) + "," + deg_str(n + 1) + "]";
                                inst.lhs = {cx.obj(a, n), Generator::kappa(alpha, n + 1)};
                                TwistScalar sc = (n == 0 || n == -1)
                                                     ? cx.vp(s(alpha, dim(a)))
                                                     : cx.one();
                                inst.rhs = {{sc, {Generator::kappa(alpha, n + 1), cx.obj(a, n)}}};
                                f.instances.push_back(std::move(inst));
                            }
                    fams.push_back(std::move(f));
                }
                fams.push_back(kappa_obj_family(
                    cx, "KZ-below", {-1}, [&](Ctx& c, const K0& al, ClassId a, long, long m) {
                        // relation indexed by the kappa degree m, object at m+1
                        return (m == 0 || m == 1) ? c.vp(-s(al, dim(a))) : c.one();
                    }));
                fams.push_back(kappa_kappa_swap_family(
                    cx, "KK-up", {1}, [&](Ctx& c, const K0& al, const K0& be, long, long) {
                        return c.vp(s(al, be));
                    }));
                fams.push_back(kappa_obj_family(
                    cx, "KZ-far", far_offsets(cx, true),
                    [&](Ctx& c, const K0& al, ClassId a, long n, long m) {
                        long sign = (n % 2 == 0) ? 1 : -1;
                        if (m == 0) return c.vp(sign * s(al, dim(a)));
                        if (m == 1) return c.vp(-sign * s(al, dim(a)));
                        return c.one();
                    }));
                fams.push_back(kappa_kappa_swap_family(cx, "KK-far", far_offsets(cx, false),
                                                       [](Ctx& c, const K0&, const K0&, long,
                                                          long) { return c.one(); }));
            }
            break;
        }
        case AlgebraId::LStar: {
            fams.push_back(merge_family(cx, 1));
            fams.push_back(kappa_merge_family(
                cx, "KK", [](Ctx& c, const K0&, const K0&) { return c.one(); }, true));
            {
                RelFamily f{"KZ", {}};
                for (const K0& alpha : kappa_grid(cx.b, win.grid_radius))
                    for (ClassId a : cx.objects())
                        for (long n : cx.degrees()) {
                            RelInstance inst;
                            inst.label =
                                "K[" + k0_str(alpha) + "]*[" + cx.cls(a) + "," + deg_str(n) + "]";
                            long sign = (n % 2 == 0) ? 1 : -1;
                            inst.lhs = {Generator::kappa_plain(alpha), cx.obj(a, n)};
                            inst.rhs = {{cx.vp(sign * s(dim(a), alpha)),
                                         {cx.obj(a, n), Generator::kappa_plain(alpha)}}};
                            f.instances.push_back(std::move(inst));
                        }
                fams.push_back(std::move(f));
            }
            fams.push_back(gamma_family(
                cx, GammaKappa::PlainSigned,
                [&](Ctx& c, ClassId a, ClassId bb, ClassId m, ClassId nn) {
                    return c.vp(e(k0_sub(dim(m), dim(nn)), k0_sub(dim(m), dim(bb))));
                }));
            fams.push_back(far_family(cx, "ZZ-far", far_offsets(cx, true),
                                      [&](Ctx& c, ClassId bb, ClassId a, long n, long m) {
                                          long d = m - n;
                                          long sign = (d % 2 == 0) ? 1 : -1;
                                          return c.vp(sign * (1 - d) * s(dim(a), dim(bb)));
                                      }));
            break;
        }
    }
    return fams;
}

}  // namespace hall
