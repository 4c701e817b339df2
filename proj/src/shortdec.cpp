#include "superlie/shortdec.hpp"

#include <set>

namespace superlie {

ShortDecomposition decompose(const AlgebraTable& g, const Sl2Data& sl2) {
    if (sl2.space() != g.space) throw error("decompose: sl2 operators must act on the algebra space");
    CheckResult rel = sl2.check_relations();
    if (!rel.passed()) throw not_sl2_error("not an sl2 action: " + rel.violations.front().residual);
    CheckResult der = sl2.check_derivations(g);
    if (!der.passed())
        throw not_sl2_error("not an sl2 action: E,F,H are not derivations (first failure at (" +
                            der.violations.front().where[1] + ", " + der.violations.front().where[2] +
                            "))");

    std::size_t n = g.dim();
    Subspace eig[5];
    std::size_t total = 0;
    for (int l = -2; l <= 2; ++l) {
        eig[l + 2] = eigenspace(sl2.H.mat, Rat(l));
        total += eig[l + 2].dim();
    }
    if (total != n) {
        // h acts with integer eigenvalues on any genuine sl2 module; name them
        for (int l = 3; l <= static_cast<int>(n) + 1; ++l)
            for (int s : {l, -l}) {
                if (eigenspace(sl2.H.mat, Rat(s)).dim() > 0)
                    throw not_short_error("not short: h-eigenvalue " + std::to_string(s) +
                                          " present");
            }
        throw not_short_error("not short: h is not diagonalizable over {-2,...,2}");
    }

    ShortDecomposition dec{g, sl2, eig[4], eig[3], eig[2].intersect(kernel(sl2.E.mat))};
    if (eig[0].dim() != dec.dim_j() || eig[1].dim() != dec.dim_m())
        throw not_short_error("not short: h-eigenspace dimensions are asymmetric");
    if (eig[2].dim() != dec.dim_j() + dec.dim_d() ||
        3 * dec.dim_j() + 2 * dec.dim_m() + dec.dim_d() != n)
        throw not_short_error("not short: dimension accounting fails");
    return dec;
}

namespace {

struct Extractor {
    const ShortDecomposition& dec;
    std::size_t n;

    Vec jrow(std::size_t i) const { return dec.J_space.basis.row(i); }
    Vec mrow(std::size_t i) const { return dec.M_space.basis.row(i); }
    Vec drow(std::size_t i) const { return dec.D_space.basis.row(i); }
    Vec br(const Vec& u, const Vec& v) const { return dec.g.mul(u, v); }
    Vec f(const Vec& u) const { return dec.sl2.F.apply(u); }

    Vec coords(const Subspace& s, const Vec& v, const char* block) const {
        auto c = s.coordinates(v);
        if (!c)
            throw error(std::string("decomposition inconsistent: a product escapes the ") + block +
                        " block");
        return *c;
    }

    Vec embed(const Subspace& s, const Vec& coords) const {
        Vec out(n);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) add_scaled(out, coords[i], s.basis.row(i));
        return out;
    }
};

SuperSpace block_space(const AlgebraTable& g, const Subspace& s, const char* prefix,
                       bool force_prefix) {
    std::vector<std::string> lab;
    std::vector<int> par;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto p = homogeneous_parity(g.space, s.basis.row(i));
        if (!p) throw error("decomposition inconsistent: non-homogeneous eigenbasis row");
        lab.push_back(force_prefix ? std::string(prefix) + g.space.label(s.pivots[i])
                                   : g.space.label(s.pivots[i]));
        par.push_back(*p);
    }
    return SuperSpace(std::move(lab), std::move(par));
}

}  // namespace

ExtractedOps extract_ternary(const ShortDecomposition& dec) {
    Extractor ex{dec, dec.g.dim()};
    std::size_t nj = dec.dim_j(), nm = dec.dim_m(), nd = dec.dim_d();

    // pivot labels give readable extracted bases; fall back to prefixed labels
    // when the J and M pivots collide
    bool clash = false;
    {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < nj; ++i)
            if (!seen.insert(dec.g.space.label(dec.J_space.pivots[i])).second) clash = true;
        for (std::size_t i = 0; i < nm; ++i)
            if (!seen.insert(dec.g.space.label(dec.M_space.pivots[i])).second) clash = true;
    }
    SuperSpace jspace = block_space(dec.g, dec.J_space, "J:", clash);
    SuperSpace mspace = block_space(dec.g, dec.M_space, "M:", clash);

    BilinearTable dot(nj, nj, nj), bullet(nj, nm, nm), star(nm, nm, nj);
    TrilinearTable triple(nm, nm);
    for (std::size_t i = 0; i < nj; ++i)
        for (std::size_t j = 0; j < nj; ++j)
            dot.set(i, j, ex.coords(dec.J_space, scaled(ex.br(ex.jrow(i), ex.f(ex.jrow(j))), Rat(1, 2)), "J"));
    for (std::size_t i = 0; i < nj; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            bullet.set(i, j, ex.coords(dec.M_space, ex.br(ex.jrow(i), ex.f(ex.mrow(j))), "M"));
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            star.set(i, j, ex.coords(dec.J_space, ex.br(ex.mrow(i), ex.mrow(j)), "J"));
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec mfn = ex.br(ex.mrow(i), ex.f(ex.mrow(j)));
            for (std::size_t k = 0; k < nm; ++k)
                triple.set(i, j, k,
                           ex.coords(dec.M_space, scaled(ex.br(mfn, ex.mrow(k)), Rat(-1)), "M"));
        }

    ExtractedOps ops;
    ops.data = JTernaryData(AlgebraTable(jspace, std::move(dot)), mspace, std::move(bullet),
                            std::move(star), std::move(triple));
    ops.angle_g = BilinearTable(nj, nj, nd);
    for (std::size_t i = 0; i < nj; ++i)
        for (std::size_t j = 0; j < nj; ++j)
            ops.angle_g.set(i, j,
                            ex.coords(dec.D_space,
                                      scaled(ex.br(ex.f(ex.jrow(i)), ex.f(ex.jrow(j))), Rat(1, 4)),
                                      "D"));
    ops.partial_g = BilinearTable(nm, nm, nd);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec v = ex.br(ex.mrow(i), ex.f(ex.mrow(j)));
            add_scaled(v, -1, ex.br(ex.f(ex.mrow(i)), ex.mrow(j)));
            ops.partial_g.set(i, j, ex.coords(dec.D_space, scaled(v, Rat(1, 2)), "D"));
        }
    return ops;
}

Report verify_short_structure(const ShortDecomposition& dec, const ExtractedOps& ops) {
    Report rep = check_super_jordan(ops.data.J);
    rep.add(check_special_supermodule(ops.data.J, ops.data.M, ops.data.bullet));

    Extractor ex{dec, dec.g.dim()};
    const JTernaryData& d = ops.data;
    std::size_t nj = d.dim_j(), nm = d.dim_m(), nd = dec.dim_d();
    auto PJ = [&](std::size_t i) { return d.J.space.parity(i); };
    auto PM = [&](std::size_t i) { return d.M.parity(i); };
    auto PD = [&](std::size_t i) {
        auto p = homogeneous_parity(dec.g.space, ex.drow(i));
        return p ? *p : 0;
    };
    auto uj = [&](std::size_t i) { return unit_vec(nj, i); };
    auto um = [&](std::size_t i) { return unit_vec(nm, i); };
    auto embedJ = [&](const Vec& c) { return ex.embed(dec.J_space, c); };
    auto embedM = [&](const Vec& c) { return ex.embed(dec.M_space, c); };
    auto embedD = [&](const Vec& c) { return ex.embed(dec.D_space, c); };
    // the invariant pairings as elements of g, bilinear in their block arguments
    auto angle_vec = [&](const Vec& a, const Vec& b) { return embedD(ops.angle_g.apply(a, b)); };
    auto partial_vec = [&](const Vec& m, const Vec& n) { return embedD(ops.partial_g.apply(m, n)); };
    auto dname = [&](std::size_t l) { return "d" + std::to_string(l); };
    auto jl = [&](std::size_t i) { return d.J.space.label(i); };
    auto ml = [&](std::size_t i) { return d.M.label(i); };

    // coordinates of [d_l, block row]; block preservation is itself part of
    // what these checks assert, so a miss is recorded, not thrown
    auto dactJ = [&](std::size_t l, std::size_t i) {
        return dec.J_space.coordinates(ex.br(ex.drow(l), ex.jrow(i)));
    };
    auto dactM = [&](std::size_t l, std::size_t j) {
        return dec.M_space.coordinates(ex.br(ex.drow(l), ex.mrow(j)));
    };

    {
        CheckResult r{"short.d_blocks", "[D, J] ⊆ J and [D, M] ⊆ M"};
        for (std::size_t l = 0; l < nd; ++l) {
            for (std::size_t i = 0; i < nj; ++i) {
                r.count();
                if (!dactJ(l, i)) r.violate({dname(l), jl(i)}, "escapes the J block");
            }
            for (std::size_t j = 0; j < nm; ++j) {
                r.count();
                if (!dactM(l, j)) r.violate({dname(l), ml(j)}, "escapes the M block");
            }
        }
        rep.add(std::move(r));
        if (!rep.passed()) return rep;  // the remaining checks need the block coordinates
    }

    {
        CheckResult r{"short.derive_dot", "d(a·b) = d(a)·b + (-1)^{|d||a|} a·d(b)"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t a = 0; a < nj; ++a)
                for (std::size_t b = 0; b < nj; ++b) {
                    r.count();
                    Vec lhs = *dec.J_space.coordinates(ex.br(ex.drow(l), embedJ(d.J.mul(a, b))));
                    Vec rhs = d.J.mul(*dactJ(l, a), uj(b));
                    add_scaled(rhs, sign_pow(PD(l) * PJ(a)), d.J.mul(uj(a), *dactJ(l, b)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), jl(a), jl(b)}, format_combo(d.J.space, vec_sub(lhs, rhs)));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.derive_bullet", "d(a•m) = d(a)•m + (-1)^{|d||a|} a•d(m)"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t a = 0; a < nj; ++a)
                for (std::size_t m = 0; m < nm; ++m) {
                    r.count();
                    Vec lhs = *dec.M_space.coordinates(ex.br(ex.drow(l), embedM(d.bullet.of(a, m))));
                    Vec rhs = d.bullet.apply(*dactJ(l, a), um(m));
                    add_scaled(rhs, sign_pow(PD(l) * PJ(a)), d.bullet.apply(uj(a), *dactM(l, m)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), jl(a), ml(m)}, format_combo(d.M, vec_sub(lhs, rhs)));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.derive_star", "d(m*n) = d(m)*n + (-1)^{|d||m|} m*d(n)"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t m = 0; m < nm; ++m)
                for (std::size_t n2 = 0; n2 < nm; ++n2) {
                    r.count();
                    Vec lhs = *dec.J_space.coordinates(ex.br(ex.drow(l), embedJ(d.star.of(m, n2))));
                    Vec rhs = d.star.apply(*dactM(l, m), um(n2));
                    add_scaled(rhs, sign_pow(PD(l) * PM(m)), d.star.apply(um(m), *dactM(l, n2)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), ml(m), ml(n2)},
                                  format_combo(d.J.space, vec_sub(lhs, rhs)));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.d_composition",
                      "[d1,d2](x) = d1(d2(x)) - (-1)^{|d1||d2|} d2(d1(x)) on J and M"};
        for (std::size_t l1 = 0; l1 < nd; ++l1)
            for (std::size_t l2 = 0; l2 < nd; ++l2) {
                Vec d12 = ex.br(ex.drow(l1), ex.drow(l2));
                Rat s = koszul_sign(PD(l1), PD(l2));
                for (std::size_t i = 0; i < nj + nm; ++i) {
                    r.count();
                    Vec x = i < nj ? ex.jrow(i) : ex.mrow(i - nj);
                    Vec lhs = ex.br(d12, x);
                    Vec rhs = ex.br(ex.drow(l1), ex.br(ex.drow(l2), x));
                    add_scaled(rhs, -s, ex.br(ex.drow(l2), ex.br(ex.drow(l1), x)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l1), dname(l2), i < nj ? jl(i) : ml(i - nj)},
                                  format_combo(dec.g.space, vec_sub(lhs, rhs)));
                }
            }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.angle_acts_j", "[<a,b>, c] = a·(b·c) - (-1)^{|a||b|} b·(a·c)"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t b = 0; b < nj; ++b)
                for (std::size_t c = 0; c < nj; ++c) {
                    r.count();
                    Vec lhs = ex.br(angle_vec(uj(a), uj(b)), ex.jrow(c));
                    Vec rhs = d.J.mul(uj(a), d.J.mul(b, c));
                    add_scaled(rhs, -koszul_sign(PJ(a), PJ(b)), d.J.mul(uj(b), d.J.mul(a, c)));
                    if (!is_zero_vec(vec_sub(lhs, embedJ(rhs))))
                        r.violate({jl(a), jl(b), jl(c)},
                                  format_combo(dec.g.space, vec_sub(lhs, embedJ(rhs))));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.angle_acts_m", "4[<a,b>, m] = a•(b•m) - (-1)^{|a||b|} b•(a•m)"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t b = 0; b < nj; ++b)
                for (std::size_t m = 0; m < nm; ++m) {
                    r.count();
                    Vec lhs = scaled(ex.br(angle_vec(uj(a), uj(b)), ex.mrow(m)), Rat(4));
                    Vec rhs = d.bullet.apply(uj(a), d.bullet.of(b, m));
                    add_scaled(rhs, -koszul_sign(PJ(a), PJ(b)),
                               d.bullet.apply(uj(b), d.bullet.of(a, m)));
                    if (!is_zero_vec(vec_sub(lhs, embedM(rhs))))
                        r.violate({jl(a), jl(b), ml(m)},
                                  format_combo(dec.g.space, vec_sub(lhs, embedM(rhs))));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.angle_cyclic",
                      "<a·b,c> + (-1)^{|c|(|a|+|b|)}<c·a,b> + (-1)^{|a|(|b|+|c|)}<b·c,a> = 0"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t b = 0; b < nj; ++b)
                for (std::size_t c = 0; c < nj; ++c) {
                    r.count();
                    Vec res = angle_vec(d.J.mul(a, b), uj(c));
                    add_scaled(res, sign_pow(PJ(c) * (PJ(a) + PJ(b))),
                               angle_vec(d.J.mul(c, a), uj(b)));
                    add_scaled(res, sign_pow(PJ(a) * (PJ(b) + PJ(c))),
                               angle_vec(d.J.mul(b, c), uj(a)));
                    if (!is_zero_vec(res))
                        r.violate({jl(a), jl(b), jl(c)}, format_combo(dec.g.space, res));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.d_angle", "[d,<a,b>] = <d(a),b> + (-1)^{|d||a|}<a,d(b)>"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t a = 0; a < nj; ++a)
                for (std::size_t b = 0; b < nj; ++b) {
                    r.count();
                    Vec lhs = ex.br(ex.drow(l), angle_vec(uj(a), uj(b)));
                    Vec rhs = angle_vec(*dactJ(l, a), uj(b));
                    add_scaled(rhs, sign_pow(PD(l) * PJ(a)), angle_vec(uj(a), *dactJ(l, b)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), jl(a), jl(b)},
                                  format_combo(dec.g.space, vec_sub(lhs, rhs)));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.d_partial", "[d,D_{m,n}] = D_{d(m),n} + (-1)^{|d||m|} D_{m,d(n)}"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t m = 0; m < nm; ++m)
                for (std::size_t n2 = 0; n2 < nm; ++n2) {
                    r.count();
                    Vec lhs = ex.br(ex.drow(l), partial_vec(um(m), um(n2)));
                    Vec rhs = partial_vec(*dactM(l, m), um(n2));
                    add_scaled(rhs, sign_pow(PD(l) * PM(m)), partial_vec(um(m), *dactM(l, n2)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), ml(m), ml(n2)},
                                  format_combo(dec.g.space, vec_sub(lhs, rhs)));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.angle_partial",
                      "2<a, m*n> = -D_{a•m,n} + (-1)^{|a||m|} D_{m,a•n}"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t m = 0; m < nm; ++m)
                for (std::size_t n2 = 0; n2 < nm; ++n2) {
                    r.count();
                    Vec lhs = scaled(angle_vec(uj(a), d.star.of(m, n2)), Rat(2));
                    Vec rhs = scaled(partial_vec(d.bullet.of(a, m), um(n2)), Rat(-1));
                    add_scaled(rhs, sign_pow(PJ(a) * PM(m)),
                               partial_vec(um(m), d.bullet.of(a, n2)));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({jl(a), ml(m), ml(n2)},
                                  format_combo(dec.g.space, vec_sub(lhs, rhs)));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.partial_acts_j",
                      "2[D_{m,n}, a] = (-1)^{|a|(|m|+|n|)}(a•m)*n - (-1)^{|a||n|} m*(a•n)"};
        for (std::size_t m = 0; m < nm; ++m)
            for (std::size_t n2 = 0; n2 < nm; ++n2)
                for (std::size_t a = 0; a < nj; ++a) {
                    r.count();
                    Vec lhs = scaled(ex.br(partial_vec(um(m), um(n2)), ex.jrow(a)), Rat(2));
                    Vec rhs = scaled(d.star.apply(d.bullet.of(a, m), um(n2)),
                                     sign_pow(PJ(a) * (PM(m) + PM(n2))));
                    add_scaled(rhs, -Rat(sign_pow(PJ(a) * PM(n2))),
                               d.star.apply(um(m), d.bullet.of(a, n2)));
                    if (!is_zero_vec(vec_sub(lhs, embedJ(rhs))))
                        r.violate({ml(m), ml(n2), jl(a)},
                                  format_combo(dec.g.space, vec_sub(lhs, embedJ(rhs))));
                }
        rep.add(std::move(r));
    }
    {
        // the form equivalent to SJT3 through D_{m,n}(r) = 1/2(m*n)•r - (m,n,r)
        CheckResult r{"short.partial_two",
                      "D_{m,n}(r) - (-1)^{|m|(|n|+|r|)+|n||r|} D_{r,n}(m) = 1/2 (m*n)•r - "
                      "1/2 (-1)^{|m|(|n|+|r|)+|n||r|} (r*n)•m + (-1)^{|n||r|} (m*r)•n"};
        for (std::size_t m = 0; m < nm; ++m)
            for (std::size_t n2 = 0; n2 < nm; ++n2)
                for (std::size_t p = 0; p < nm; ++p) {
                    r.count();
                    int s = sign_pow(PM(m) * (PM(n2) + PM(p)) + PM(n2) * PM(p));
                    Vec lhs = ex.br(partial_vec(um(m), um(n2)), ex.mrow(p));
                    add_scaled(lhs, -s, ex.br(partial_vec(um(p), um(n2)), ex.mrow(m)));
                    Vec rhs = scaled(d.bullet.apply(d.star.of(m, n2), um(p)), Rat(1, 2));
                    add_scaled(rhs, -Rat(s) / 2, d.bullet.apply(d.star.of(p, n2), um(m)));
                    add_scaled(rhs, sign_pow(PM(n2) * PM(p)),
                               d.bullet.apply(d.star.of(m, p), um(n2)));
                    if (!is_zero_vec(vec_sub(lhs, embedM(rhs))))
                        r.violate({ml(m), ml(n2), ml(p)},
                                  format_combo(dec.g.space, vec_sub(lhs, embedM(rhs))));
                }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.compat", "a·(m*n) = 1/2 ((a•m)*n + (-1)^{|a||m|} m*(a•n))"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t m = 0; m < nm; ++m)
                for (std::size_t n2 = 0; n2 < nm; ++n2) {
                    r.count();
                    Vec lhs = d.J.mul(uj(a), d.star.of(m, n2));
                    Vec rhs = d.star.apply(d.bullet.of(a, m), um(n2));
                    add_scaled(rhs, sign_pow(PJ(a) * PM(m)),
                               d.star.apply(um(m), d.bullet.of(a, n2)));
                    add_scaled(lhs, Rat(-1, 2), rhs);
                    if (!is_zero_vec(lhs))
                        r.violate({jl(a), ml(m), ml(n2)}, format_combo(d.J.space, lhs));
                }
        rep.add(std::move(r));
    }

    // bracket formulas of the invariant pairings
    {
        CheckResult r{"short.bracket_angle_angle",
                      "[<a,b>,<c,e>] = <<a,b>(c),e> + (-1)^{(|a|+|b|)|c|}<c,<a,b>(e)>"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t b = 0; b < nj; ++b)
                for (std::size_t c = 0; c < nj; ++c)
                    for (std::size_t e = 0; e < nj; ++e) {
                        r.count();
                        Vec ab = angle_vec(uj(a), uj(b));
                        Vec lhs = ex.br(ab, angle_vec(uj(c), uj(e)));
                        Vec abc = *dec.J_space.coordinates(ex.br(ab, ex.jrow(c)));
                        Vec abe = *dec.J_space.coordinates(ex.br(ab, ex.jrow(e)));
                        Vec rhs = angle_vec(abc, uj(e));
                        add_scaled(rhs, sign_pow((PJ(a) + PJ(b)) * PJ(c)), angle_vec(uj(c), abe));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({jl(a), jl(b), jl(c), jl(e)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.bracket_angle_partial",
                      "[<a,b>,D_{m,n}] = D_{<a,b>(m),n} + (-1)^{(|a|+|b|)|m|} D_{m,<a,b>(n)}"};
        for (std::size_t a = 0; a < nj; ++a)
            for (std::size_t b = 0; b < nj; ++b)
                for (std::size_t m = 0; m < nm; ++m)
                    for (std::size_t n2 = 0; n2 < nm; ++n2) {
                        r.count();
                        Vec ab = angle_vec(uj(a), uj(b));
                        Vec lhs = ex.br(ab, partial_vec(um(m), um(n2)));
                        Vec abm = *dec.M_space.coordinates(ex.br(ab, ex.mrow(m)));
                        Vec abn = *dec.M_space.coordinates(ex.br(ab, ex.mrow(n2)));
                        Vec rhs = partial_vec(abm, um(n2));
                        add_scaled(rhs, sign_pow((PJ(a) + PJ(b)) * PM(m)), partial_vec(um(m), abn));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({jl(a), jl(b), ml(m), ml(n2)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.bracket_partial_partial",
                      "[D_{m,n},D_{r,s}] = D_{D_{m,n}(r),s} + (-1)^{(|m|+|n|)|r|} D_{r,D_{m,n}(s)}"};
        for (std::size_t m = 0; m < nm; ++m)
            for (std::size_t n2 = 0; n2 < nm; ++n2)
                for (std::size_t p = 0; p < nm; ++p)
                    for (std::size_t s = 0; s < nm; ++s) {
                        r.count();
                        Vec mn = partial_vec(um(m), um(n2));
                        Vec lhs = ex.br(mn, partial_vec(um(p), um(s)));
                        Vec mnr = *dec.M_space.coordinates(ex.br(mn, ex.mrow(p)));
                        Vec mns = *dec.M_space.coordinates(ex.br(mn, ex.mrow(s)));
                        Vec rhs = partial_vec(mnr, um(s));
                        add_scaled(rhs, sign_pow((PM(m) + PM(n2)) * PM(p)), partial_vec(um(p), mns));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({ml(m), ml(n2), ml(p), ml(s)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        rep.add(std::move(r));
    }

    // derivation relations through a pairing: d applied to <a,b>(x) or D_{m,n}(x)
    {
        CheckResult r{"short.deriv_rel_angle",
                      "d(<a,b>(x)) = <d(a),b>(x) + (-1)^{|d||a|}<a,d(b)>(x) + "
                      "(-1)^{|d|(|a|+|b|)}<a,b>(d(x))"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t a = 0; a < nj; ++a)
                for (std::size_t b = 0; b < nj; ++b)
                    for (std::size_t x = 0; x < nj + nm; ++x) {
                        r.count();
                        Vec xv = x < nj ? ex.jrow(x) : ex.mrow(x - nj);
                        Vec ab = angle_vec(uj(a), uj(b));
                        Vec lhs = ex.br(ex.drow(l), ex.br(ab, xv));
                        Vec rhs = ex.br(angle_vec(*dactJ(l, a), uj(b)), xv);
                        add_scaled(rhs, sign_pow(PD(l) * PJ(a)),
                                   ex.br(angle_vec(uj(a), *dactJ(l, b)), xv));
                        add_scaled(rhs, sign_pow(PD(l) * (PJ(a) + PJ(b))),
                                   ex.br(ab, ex.br(ex.drow(l), xv)));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({dname(l), jl(a), jl(b), x < nj ? jl(x) : ml(x - nj)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        rep.add(std::move(r));
    }
    {
        CheckResult r{"short.deriv_rel_partial",
                      "d(D_{m,n}(x)) = D_{d(m),n}(x) + (-1)^{|d||m|} D_{m,d(n)}(x) + "
                      "(-1)^{|d|(|m|+|n|)} D_{m,n}(d(x))"};
        for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t m = 0; m < nm; ++m)
                for (std::size_t n2 = 0; n2 < nm; ++n2)
                    for (std::size_t x = 0; x < nj + nm; ++x) {
                        r.count();
                        Vec xv = x < nj ? ex.jrow(x) : ex.mrow(x - nj);
                        Vec mn = partial_vec(um(m), um(n2));
                        Vec lhs = ex.br(ex.drow(l), ex.br(mn, xv));
                        Vec rhs = ex.br(partial_vec(*dactM(l, m), um(n2)), xv);
                        add_scaled(rhs, sign_pow(PD(l) * PM(m)),
                                   ex.br(partial_vec(um(m), *dactM(l, n2)), xv));
                        add_scaled(rhs, sign_pow(PD(l) * (PM(m) + PM(n2))),
                                   ex.br(mn, ex.br(ex.drow(l), xv)));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({dname(l), ml(m), ml(n2), x < nj ? jl(x) : ml(x - nj)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        rep.add(std::move(r));
    }

    // the dictionary: block images reproduce the five bracket descriptions
    {
        CheckResult r{"short.dictionary",
                      "brackets of block images match the short bracket description"};
        const Sl2Fixtures& fx = sl2_fixtures();
        const GradedMap* vops[3] = {&fx.E, &fx.H, &fx.F};
        auto X = [&](std::size_t x, std::size_t i) -> Vec {
            Vec a = ex.jrow(i);
            if (x == kE) return a;
            if (x == kH) return scaled(ex.f(a), Rat(-1));
            return scaled(ex.f(ex.f(a)), Rat(-1, 2));
        };
        auto Vv = [&](std::size_t v, std::size_t j) -> Vec {
            Vec m = ex.mrow(j);
            return v == kE1 ? m : ex.f(m);
        };
        // [x⊗a, y⊗b]
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y)
                for (std::size_t i = 0; i < nj; ++i)
                    for (std::size_t j = 0; j < nj; ++j) {
                        r.count();
                        Vec lhs = ex.br(X(x, i), X(y, j));
                        Vec xy = fx.sl2.mul(x, y);
                        Vec dot = d.J.mul(i, j);
                        Vec rhs(dec.g.dim());
                        for (std::size_t z = 0; z < 3; ++z) {
                            if (xy[z] == 0) continue;
                            for (std::size_t k = 0; k < nj; ++k)
                                if (dot[k] != 0) add_scaled(rhs, xy[z] * dot[k], X(z, k));
                        }
                        add_scaled(rhs, fx.forms.kappa(x, y) / 2, angle_vec(uj(i), uj(j)));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({std::to_string(x) + "⊗" + jl(i),
                                       std::to_string(y) + "⊗" + jl(j)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        // [x⊗a, v⊗m]
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t v = 0; v < 2; ++v)
                for (std::size_t i = 0; i < nj; ++i)
                    for (std::size_t j = 0; j < nm; ++j) {
                        r.count();
                        Vec lhs = ex.br(X(x, i), Vv(v, j));
                        Vec xv = vops[x]->apply_basis(v);
                        Vec bul = d.bullet.of(i, j);
                        Vec rhs(dec.g.dim());
                        for (std::size_t w = 0; w < 2; ++w) {
                            if (xv[w] == 0) continue;
                            for (std::size_t k = 0; k < nm; ++k)
                                if (bul[k] != 0) add_scaled(rhs, xv[w] * bul[k], Vv(w, k));
                        }
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({std::to_string(x) + "⊗" + jl(i),
                                       std::to_string(v) + "⊗" + ml(j)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        // [v⊗m, w⊗n]
        for (std::size_t v = 0; v < 2; ++v)
            for (std::size_t w = 0; w < 2; ++w)
                for (std::size_t i = 0; i < nm; ++i)
                    for (std::size_t j = 0; j < nm; ++j) {
                        r.count();
                        Vec lhs = ex.br(Vv(v, i), Vv(w, j));
                        Vec sym = fx.forms.sym.of(v, w);
                        Vec st = d.star.of(i, j);
                        Vec rhs(dec.g.dim());
                        for (std::size_t z = 0; z < 3; ++z) {
                            if (sym[z] == 0) continue;
                            for (std::size_t k = 0; k < nj; ++k)
                                if (st[k] != 0) add_scaled(rhs, sym[z] * st[k], X(z, k));
                        }
                        add_scaled(rhs, fx.forms.det(v, w), partial_vec(um(i), um(j)));
                        if (!is_zero_vec(vec_sub(lhs, rhs)))
                            r.violate({std::to_string(v) + "⊗" + ml(i),
                                       std::to_string(w) + "⊗" + ml(j)},
                                      format_combo(dec.g.space, vec_sub(lhs, rhs)));
                    }
        // [d, x⊗a] and [d, v⊗m]
        for (std::size_t l = 0; l < nd; ++l) {
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t i = 0; i < nj; ++i) {
                    r.count();
                    Vec lhs = ex.br(ex.drow(l), X(x, i));
                    Vec da = *dactJ(l, i);
                    Vec rhs(dec.g.dim());
                    for (std::size_t k = 0; k < nj; ++k)
                        if (da[k] != 0) add_scaled(rhs, da[k], X(x, k));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), std::to_string(x) + "⊗" + jl(i)},
                                  format_combo(dec.g.space, vec_sub(lhs, rhs)));
                }
            for (std::size_t v = 0; v < 2; ++v)
                for (std::size_t j = 0; j < nm; ++j) {
                    r.count();
                    Vec lhs = ex.br(ex.drow(l), Vv(v, j));
                    Vec dm = *dactM(l, j);
                    Vec rhs(dec.g.dim());
                    for (std::size_t k = 0; k < nm; ++k)
                        if (dm[k] != 0) add_scaled(rhs, dm[k], Vv(v, k));
                    if (!is_zero_vec(vec_sub(lhs, rhs)))
                        r.violate({dname(l), std::to_string(v) + "⊗" + ml(j)},
                                  format_combo(dec.g.space, vec_sub(lhs, rhs)));
                }
        }
        rep.add(std::move(r));
    }
    return rep;
}

PhiResult phi_map(const AlgebraTable& g, const Sl2Data& sl2) {
    PhiResult out{decompose(g, sl2), {}, {}, {}, 0, false, false, {}};
    out.ops = extract_ternary(out.dec);
    Report pre = check_jternary_full(out.ops.data);
    if (!pre.passed())
        throw construction_error("phi_map: extracted data fails the J-ternary axioms", std::move(pre));
    out.tag_alg = tag(out.ops.data);

    const ShortDecomposition& dec = out.dec;
    Extractor ex{dec, g.dim()};
    const BlockLayout& lay = out.tag_alg.layout;
    std::size_t nj = lay.dim_j, nm = lay.dim_m;
    Matrix phi(g.dim(), lay.dim());
    auto put = [&](std::size_t col, const Vec& img) {
        for (std::size_t i = 0; i < g.dim(); ++i) phi(i, col) = img[i];
    };
    for (std::size_t i = 0; i < nj; ++i) {
        put(lay.sl2_index(kE, i), ex.jrow(i));
        put(lay.sl2_index(kH, i), scaled(ex.f(ex.jrow(i)), Rat(-1)));
        put(lay.sl2_index(kF, i), scaled(ex.f(ex.f(ex.jrow(i))), Rat(-1, 2)));
    }
    for (std::size_t j = 0; j < nm; ++j) {
        put(lay.v_index(kE1, j), ex.mrow(j));
        put(lay.v_index(kE2, j), ex.f(ex.mrow(j)));
    }
    for (std::size_t u = 0; u < lay.dim_d; ++u) {
        std::size_t rep = out.tag_alg.bs->quotient.representatives[u];
        Vec img;
        if (rep < nj * nj)
            img = ex.embed(dec.D_space, out.ops.angle_g.of(rep / nj, rep % nj));
        else {
            std::size_t k = rep - nj * nj;
            img = ex.embed(dec.D_space, out.ops.partial_g.of(k / nm, k % nm));
        }
        put(lay.d_index(u), img);
    }
    out.phi = GradedMap(out.tag_alg.table.space, g.space, 0, std::move(phi));

    {
        CheckResult r{"phi.morphism", "phi([x,y]) = [phi(x),phi(y)]"};
        std::size_t n = lay.dim();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                r.count();
                Vec lhs = out.phi.apply(out.tag_alg.table.mul(a, b));
                Vec rhs = g.mul(out.phi.apply_basis(a), out.phi.apply_basis(b));
                if (!is_zero_vec(vec_sub(lhs, rhs)))
                    r.violate({out.tag_alg.table.space.label(a), out.tag_alg.table.space.label(b)},
                              format_combo(g.space, vec_sub(lhs, rhs)));
            }
        out.checks.add(std::move(r));
    }
    {
        CheckResult r{"phi.sl2_equivariant", "phi(X·x) = X(phi(x)) for X in {E,F,H}"};
        Sl2Data blocks = canonical_block_sl2(out.tag_alg);
        const GradedMap* src[3] = {&blocks.E, &blocks.F, &blocks.H};
        const GradedMap* dst[3] = {&sl2.E, &sl2.F, &sl2.H};
        for (int t = 0; t < 3; ++t)
            for (std::size_t a = 0; a < lay.dim(); ++a) {
                r.count();
                Vec lhs = out.phi.apply(src[t]->apply_basis(a));
                Vec rhs = dst[t]->apply(out.phi.apply_basis(a));
                if (!is_zero_vec(vec_sub(lhs, rhs)))
                    r.violate({"EFH"[t] + std::string(""), out.tag_alg.table.space.label(a)},
                              format_combo(g.space, vec_sub(lhs, rhs)));
            }
        out.checks.add(std::move(r));
    }
    out.rank = rref(out.phi.mat).pivots.size();
    out.injective = out.rank == lay.dim();
    out.surjective = out.rank == g.dim();
    return out;
}

Report roundtrip_check(const JTernaryData& d) {
    Report rep;
    AssembledLie t = tag(d);
    Sl2Data blocks = canonical_block_sl2(t);
    ShortDecomposition dec = decompose(t.table, blocks);
    {
        CheckResult r{"roundtrip.blocks",
                      "the weight-2 and weight-1 spaces are exactly e⊗J and e1⊗M"};
        r.tuples = 2;
        bool okj = dec.dim_j() == d.dim_j(), okm = dec.dim_m() == d.dim_m();
        for (std::size_t i = 0; okj && i < dec.dim_j(); ++i)
            okj = dec.J_space.basis.row(i) == unit_vec(t.layout.dim(), t.layout.sl2_index(kE, i));
        for (std::size_t j = 0; okm && j < dec.dim_m(); ++j)
            okm = dec.M_space.basis.row(j) == unit_vec(t.layout.dim(), t.layout.v_index(kE1, j));
        if (!okj) r.violate({"J"}, "weight-2 block differs from e⊗J");
        if (!okm) r.violate({"M"}, "weight-1 block differs from e1⊗M");
        rep.add(std::move(r));
        if (!rep.passed()) return rep;
    }
    ExtractedOps ops = extract_ternary(dec);
    auto cmp_bilinear = [&](const char* id, const BilinearTable& got, const BilinearTable& want,
                            const SuperSpace& ls, const SuperSpace& rs) {
        CheckResult r{id, "re-extracted table equals the seed table"};
        r.tuples = got.nl * got.nr;
        if (got.nl != want.nl || got.nr != want.nr || got.nout != want.nout) {
            r.violate({}, "table shape differs");
        } else {
            for (std::size_t i = 0; i < got.nl; ++i)
                for (std::size_t j = 0; j < got.nr; ++j)
                    if (got.of(i, j) != want.of(i, j))
                        r.violate({ls.label(i), rs.label(j)}, "entry differs");
        }
        rep.add(std::move(r));
    };
    cmp_bilinear("roundtrip.dot", ops.data.J.product, d.J.product, d.J.space, d.J.space);
    cmp_bilinear("roundtrip.bullet", ops.data.bullet, d.bullet, d.J.space, d.M);
    cmp_bilinear("roundtrip.star", ops.data.star, d.star, d.M, d.M);
    {
        CheckResult r{"roundtrip.triple", "re-extracted triple product equals the seed"};
        r.tuples = d.dim_m() * d.dim_m() * d.dim_m();
        if (ops.data.triple.n != d.triple.n) {
            r.violate({}, "table shape differs");
        } else {
            for (std::size_t i = 0; i < d.dim_m(); ++i)
                for (std::size_t j = 0; j < d.dim_m(); ++j)
                    for (std::size_t k = 0; k < d.dim_m(); ++k)
                        if (ops.data.triple.of(i, j, k) != d.triple.of(i, j, k))
                            r.violate({d.M.label(i), d.M.label(j), d.M.label(k)}, "entry differs");
        }
        rep.add(std::move(r));
    }
    return rep;
}

}  // namespace superlie
