#include "superlie/constructions.hpp"

namespace superlie {

Report check_jternary_full(const JTernaryData& d) {
    Report rep = check_super_jordan(d.J);
    rep.add(check_special_supermodule(d.J, d.M, d.bullet));
    rep.merge(check_jternary(d));
    return rep;
}

namespace {

// flattened J(x)J + M(x)M, J block first
struct TensorAmbient {
    std::size_t nj, nm;
    std::size_t dim() const { return nj * nj + nm * nm; }
    std::size_t jj(std::size_t i, std::size_t j) const { return i * nj + j; }
    std::size_t mm(std::size_t i, std::size_t j) const { return nj * nj + i * nm + j; }
};

SuperSpace tensor_ambient_space(const JTernaryData& d) {
    return SuperSpace::direct_sum(TensorSquare(d.J.space).as_superspace(),
                                  TensorSquare(d.M).as_superspace());
}

Matrix m_restriction(const JTernaryData& d, const GradedMap& op) {
    std::size_t nj = d.dim_j(), nm = d.dim_m();
    Matrix m(nm, nm);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) m(i, j) = op.mat(nj + i, nj + j);
    return m;
}

Matrix j_restriction(const JTernaryData& d, const GradedMap& op) {
    std::size_t nj = d.dim_j();
    Matrix m(nj, nj);
    for (std::size_t i = 0; i < nj; ++i)
        for (std::size_t j = 0; j < nj; ++j) m(i, j) = op.mat(i, j);
    return m;
}

// derivation action of an operator on the tensor ambient:
// D(x⊗y) = D(x)⊗y + (-1)^{|D||x|} x⊗D(y) blockwise
Matrix tensor_derivation(const JTernaryData& d, const GradedMap& op) {
    TensorAmbient t{d.dim_j(), d.dim_m()};
    Matrix jb = j_restriction(d, op), mb = m_restriction(d, op);
    Matrix a(t.dim(), t.dim());
    for (std::size_t i = 0; i < t.nj; ++i)
        for (std::size_t j = 0; j < t.nj; ++j) {
            Rat s = sign_pow(op.parity * d.J.space.parity(i));
            for (std::size_t k = 0; k < t.nj; ++k) {
                if (jb(k, i) != 0) a(t.jj(k, j), t.jj(i, j)) += jb(k, i);
                if (jb(k, j) != 0) a(t.jj(i, k), t.jj(i, j)) += s * jb(k, j);
            }
        }
    for (std::size_t i = 0; i < t.nm; ++i)
        for (std::size_t j = 0; j < t.nm; ++j) {
            Rat s = sign_pow(op.parity * d.M.parity(i));
            for (std::size_t k = 0; k < t.nm; ++k) {
                if (mb(k, i) != 0) a(t.mm(k, j), t.mm(i, j)) += mb(k, i);
                if (mb(k, j) != 0) a(t.mm(i, k), t.mm(i, j)) += s * mb(k, j);
            }
        }
    return a;
}

}  // namespace

Subspace rs_relations(const JTernaryData& d) {
    std::size_t nj = d.dim_j(), nm = d.dim_m();
    TensorAmbient t{nj, nm};
    auto PJ = [&](std::size_t i) { return d.J.space.parity(i); };
    auto PM = [&](std::size_t i) { return d.M.parity(i); };
    Matrix rows(0, t.dim());

    // I_{a,b} = a⊗b + (-1)^{|a||b|} b⊗a
    for (std::size_t a = 0; a < nj; ++a)
        for (std::size_t b = a; b < nj; ++b) {
            Vec v(t.dim());
            v[t.jj(a, b)] += 1;
            v[t.jj(b, a)] += koszul_sign(PJ(a), PJ(b));
            rows.append_row(v);
        }
    // I_{m,n} = m⊗n - (-1)^{|m||n|} n⊗m
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t n = m; n < nm; ++n) {
            Vec v(t.dim());
            v[t.mm(m, n)] += 1;
            v[t.mm(n, m)] -= koszul_sign(PM(m), PM(n));
            rows.append_row(v);
        }
    // I_{a,b,c} = (-1)^{|a||c|}(a·b)⊗c + (-1)^{|a||b|}(b·c)⊗a + (-1)^{|b||c|}(c·a)⊗b
    for (std::size_t a = 0; a < nj; ++a)
        for (std::size_t b = 0; b < nj; ++b)
            for (std::size_t c = 0; c < nj; ++c) {
                Vec v(t.dim());
                Vec ab = d.J.mul(a, b), bc = d.J.mul(b, c), ca = d.J.mul(c, a);
                for (std::size_t k = 0; k < nj; ++k) {
                    v[t.jj(k, c)] += Rat(sign_pow(PJ(a) * PJ(c))) * ab[k];
                    v[t.jj(k, a)] += Rat(sign_pow(PJ(a) * PJ(b))) * bc[k];
                    v[t.jj(k, b)] += Rat(sign_pow(PJ(b) * PJ(c))) * ca[k];
                }
                rows.append_row(v);
            }
    // I_{a,m,n} = (a•m)⊗n - (-1)^{|a||m|} m⊗(a•n) - (-1)^{|a|(|m|+|n|)} 2(m*n)⊗a
    for (std::size_t a = 0; a < nj; ++a)
        for (std::size_t m = 0; m < nm; ++m)
            for (std::size_t n = 0; n < nm; ++n) {
                Vec v(t.dim());
                Vec am = d.bullet.of(a, m), an = d.bullet.of(a, n), mn = d.star.of(m, n);
                for (std::size_t k = 0; k < nm; ++k) {
                    v[t.mm(k, n)] += am[k];
                    v[t.mm(m, k)] -= Rat(sign_pow(PJ(a) * PM(m))) * an[k];
                }
                for (std::size_t k = 0; k < nj; ++k)
                    v[t.jj(k, a)] -= Rat(2 * sign_pow(PJ(a) * (PM(m) + PM(n)))) * mn[k];
                rows.append_row(v);
            }
    // I_{m,n,r,s} = D_{m,n}(r)⊗s + (-1)^{(|m|+|n|)|r|} r⊗D_{m,n}(s)
    //             + (-1)^{(|m|+|n|)(|r|+|s|)} D_{r,s}(m)⊗n + (-1)^{(|r|+|s|)|n|} m⊗D_{r,s}(n)
    std::vector<Matrix> pmat(nm * nm);
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t n = 0; n < nm; ++n)
            pmat[m * nm + n] = m_restriction(d, partial_op(d, m, n).action);
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t n = 0; n < nm; ++n)
            for (std::size_t r = 0; r < nm; ++r)
                for (std::size_t s = 0; s < nm; ++s) {
                    const Matrix& dmn = pmat[m * nm + n];
                    const Matrix& drs = pmat[r * nm + s];
                    Vec v(t.dim());
                    int pmn = PM(m) + PM(n), prs = PM(r) + PM(s);
                    for (std::size_t k = 0; k < nm; ++k) {
                        v[t.mm(k, s)] += dmn(k, r);
                        v[t.mm(r, k)] += Rat(sign_pow(pmn * PM(r))) * dmn(k, s);
                        v[t.mm(k, n)] += Rat(sign_pow(pmn * prs)) * drs(k, m);
                        v[t.mm(m, k)] += Rat(sign_pow(prs * PM(n))) * drs(k, n);
                    }
                    rows.append_row(v);
                }
    return Subspace::from_rows(t.dim(), rows);
}

BsAlgebra bs_quotient(const JTernaryData& d) {
    std::size_t nj = d.dim_j(), nm = d.dim_m();
    TensorAmbient t{nj, nm};
    BsAlgebra bs;
    bs.ambient = tensor_ambient_space(d);
    bs.relations = rs_relations(d);
    bs.quotient = quotient_complement(bs.relations);
    bs.innder = innder_basis(d);

    std::size_t nb = bs.quotient.representatives.size();
    {
        std::vector<std::string> lab;
        std::vector<int> par;
        for (auto rep : bs.quotient.representatives) {
            lab.push_back(bs.ambient.label(rep));
            par.push_back(bs.ambient.parity(rep));
        }
        bs.space = SuperSpace(std::move(lab), std::move(par));
    }

    for (auto rep : bs.quotient.representatives) {
        if (rep < nj * nj) {
            auto [i, j] = std::pair(rep / nj, rep % nj);
            bs.class_ops.push_back(angle_op(d, i, j).action);
        } else {
            std::size_t k = rep - nj * nj;
            bs.class_ops.push_back(partial_op(d, k / nm, k % nm).action);
        }
    }

    // phi into the inner derivation span coordinates
    {
        Matrix m(bs.innder.dim(), nb);
        for (std::size_t u = 0; u < nb; ++u) {
            auto coords = bs.innder.span.coordinates(bs.class_ops[u].mat.flattened());
            if (!coords) throw error("bs_quotient: class operator escaped the inner derivation span");
            for (std::size_t l = 0; l < bs.innder.dim(); ++l) m(l, u) = (*coords)[l];
        }
        bs.phi = GradedMap(bs.space, bs.innder.d_space, 0, std::move(m));
    }

    bs.angle_to_d = BilinearTable(nj, nj, nb);
    for (std::size_t i = 0; i < nj; ++i)
        for (std::size_t j = 0; j < nj; ++j)
            bs.angle_to_d.set(i, j, bs.quotient.projection.apply(unit_vec(t.dim(), t.jj(i, j))));
    bs.partial_to_d = BilinearTable(nm, nm, nb);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            bs.partial_to_d.set(i, j, bs.quotient.projection.apply(unit_vec(t.dim(), t.mm(i, j))));

    // bracket through the inner operator of the first argument, plus the
    // well-definedness sweep: acting on any relation must project to zero
    std::vector<Matrix> der(nb);
    for (std::size_t u = 0; u < nb; ++u) der[u] = tensor_derivation(d, bs.class_ops[u]);

    CheckResult wd{"bs.well_defined", "phi(class) applied to R^s projects to zero"};
    for (std::size_t u = 0; u < nb; ++u)
        for (std::size_t r = 0; r < bs.relations.dim(); ++r) {
            wd.count();
            Vec img = bs.quotient.projection.apply(der[u].apply(bs.relations.basis.row(r)));
            if (!is_zero_vec(img))
                wd.violate({bs.space.label(u), "relation " + std::to_string(r)},
                           format_combo(bs.space, img));
        }
    if (!wd.passed()) throw error("bs_quotient: bracket not well-defined on representatives");
    bs.checks.add(std::move(wd));

    bs.bracket = BilinearTable(nb, nb, nb);
    for (std::size_t u = 0; u < nb; ++u)
        for (std::size_t v = 0; v < nb; ++v) {
            Vec lift = unit_vec(t.dim(), bs.quotient.representatives[v]);
            bs.bracket.set(u, v, bs.quotient.projection.apply(der[u].apply(lift)));
        }

    AlgebraTable bs_table(bs.space, bs.bracket);
    {
        CheckResult r = check_super_anticommutative(bs_table);
        r.id = "bs.anticommutative";
        bs.checks.add(std::move(r));
        CheckResult j = check_super_jacobi(bs_table);
        j.id = "bs.jacobi";
        bs.checks.add(std::move(j));
    }
    {
        CheckResult r{"bs.phi_morphism", "phi([u,v]) = [phi(u),phi(v)] in InnDer coordinates"};
        for (std::size_t u = 0; u < nb; ++u)
            for (std::size_t v = 0; v < nb; ++v) {
                r.count();
                Vec lhs = bs.phi.apply(bs.bracket.of(u, v));
                Vec rhs = bs.innder.bracket.apply(bs.phi.apply_basis(u), bs.phi.apply_basis(v));
                if (!is_zero_vec(vec_sub(lhs, rhs)))
                    r.violate({bs.space.label(u), bs.space.label(v)},
                              format_combo(bs.innder.d_space, vec_sub(lhs, rhs)));
            }
        bs.checks.add(std::move(r));
    }
    {
        CheckResult r{"bs.phi_surjective", "phi reaches every inner derivation"};
        r.tuples = 1;
        if (rref(bs.phi.mat).pivots.size() != bs.innder.dim())
            r.violate({}, "rank " + std::to_string(rref(bs.phi.mat).pivots.size()) + " < dim " +
                              std::to_string(bs.innder.dim()));
        bs.checks.add(std::move(r));
    }
    {
        CheckResult r{"bs.kernel_central", "ker(phi) brackets to zero with all of B^s"};
        Subspace ker = kernel(bs.phi.mat);
        for (std::size_t k = 0; k < ker.dim(); ++k)
            for (std::size_t v = 0; v < nb; ++v) {
                r.count();
                Vec a = bs.bracket.apply(ker.basis.row(k), unit_vec(nb, v));
                Vec b = bs.bracket.apply(unit_vec(nb, v), ker.basis.row(k));
                if (!is_zero_vec(a) || !is_zero_vec(b))
                    r.violate({"ker " + std::to_string(k), bs.space.label(v)},
                              format_combo(bs.space, is_zero_vec(a) ? b : a));
            }
        bs.checks.add(std::move(r));
    }
    return bs;
}

namespace {

struct DBlock {
    SuperSpace space;
    std::vector<GradedMap> action;  // operators on J+M per basis vector
    BilinearTable bracket;          // D(x)D -> D
    BilinearTable angle_to_d;       // J(x)J -> D
    BilinearTable partial_to_d;     // M(x)M -> D
};

AssembledLie assemble(const JTernaryData& d, DBlock db, Provenance prov) {
    const Sl2Fixtures& fx = sl2_fixtures();
    const GradedMap* vops[3] = {&fx.E, &fx.H, &fx.F};  // basis order (e,h,f)
    static const char* xname[3] = {"e", "h", "f"};
    static const char* vname[2] = {"e1", "e2"};

    std::size_t nj = d.dim_j(), nm = d.dim_m(), nd = db.space.dim();
    BlockLayout lay{nj, nm, nd};
    std::size_t n = lay.dim();

    std::vector<std::string> lab(n);
    std::vector<int> par(n);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t i = 0; i < nj; ++i) {
            lab[lay.sl2_index(x, i)] = std::string(xname[x]) + "⊗" + d.J.space.label(i);
            par[lay.sl2_index(x, i)] = d.J.space.parity(i);
        }
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t j = 0; j < nm; ++j) {
            lab[lay.v_index(v, j)] = std::string(vname[v]) + "⊗" + d.M.label(j);
            par[lay.v_index(v, j)] = d.M.parity(j);
        }
    for (std::size_t k = 0; k < nd; ++k) {
        lab[lay.d_index(k)] = db.space.label(k);
        par[lay.d_index(k)] = db.space.parity(k);
    }
    SuperSpace space(std::move(lab), std::move(par));

    BilinearTable b(n, n, n);

    // [x⊗a, y⊗b] = [x,y]⊗a·b + (1/2) kappa(x,y) <a,b>
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            Vec xy = fx.sl2.mul(x, y);
            Rat kap = fx.forms.kappa(x, y) / 2;
            for (std::size_t i = 0; i < nj; ++i)
                for (std::size_t j = 0; j < nj; ++j) {
                    Vec out(n);
                    Vec dot = d.J.mul(i, j);
                    for (std::size_t z = 0; z < 3; ++z) {
                        if (xy[z] == 0) continue;
                        for (std::size_t k = 0; k < nj; ++k)
                            out[lay.sl2_index(z, k)] += xy[z] * dot[k];
                    }
                    if (kap != 0)
                        for (std::size_t l = 0; l < nd; ++l)
                            out[lay.d_index(l)] += kap * db.angle_to_d.at(i, j, l);
                    b.set(lay.sl2_index(x, i), lay.sl2_index(y, j), out);
                }
        }

    // [x⊗a, v⊗m] = x(v)⊗a•m and its mirror
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t v = 0; v < 2; ++v) {
            Vec xv = vops[x]->apply_basis(v);
            for (std::size_t i = 0; i < nj; ++i)
                for (std::size_t j = 0; j < nm; ++j) {
                    Vec out(n);
                    Vec bul = d.bullet.of(i, j);
                    for (std::size_t w = 0; w < 2; ++w) {
                        if (xv[w] == 0) continue;
                        for (std::size_t k = 0; k < nm; ++k)
                            out[lay.v_index(w, k)] += xv[w] * bul[k];
                    }
                    b.set(lay.sl2_index(x, i), lay.v_index(v, j), out);
                    b.set(lay.v_index(v, j), lay.sl2_index(x, i),
                          scaled(out, -koszul_sign(d.J.space.parity(i), d.M.parity(j))));
                }
        }

    // [v⊗m, w⊗n] = (v.w)⊗m*n + det(v,w) D_{m,n}
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t w = 0; w < 2; ++w) {
            Vec sym = fx.forms.sym.of(v, w);
            Rat dt = fx.forms.det(v, w);
            for (std::size_t i = 0; i < nm; ++i)
                for (std::size_t j = 0; j < nm; ++j) {
                    Vec out(n);
                    Vec st = d.star.of(i, j);
                    for (std::size_t z = 0; z < 3; ++z) {
                        if (sym[z] == 0) continue;
                        for (std::size_t k = 0; k < nj; ++k)
                            out[lay.sl2_index(z, k)] += sym[z] * st[k];
                    }
                    if (dt != 0)
                        for (std::size_t l = 0; l < nd; ++l)
                            out[lay.d_index(l)] += dt * db.partial_to_d.at(i, j, l);
                    b.set(lay.v_index(v, i), lay.v_index(w, j), out);
                }
        }

    // [d, x⊗a] = x⊗d(a), [d, v⊗m] = v⊗d(m), mirrors by super-antisymmetry
    for (std::size_t k = 0; k < nd; ++k) {
        const GradedMap& op = db.action[k];
        int pd = db.space.parity(k);
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t i = 0; i < nj; ++i) {
                Vec out(n);
                for (std::size_t l = 0; l < nj; ++l) out[lay.sl2_index(x, l)] = op.mat(l, i);
                b.set(lay.d_index(k), lay.sl2_index(x, i), out);
                b.set(lay.sl2_index(x, i), lay.d_index(k),
                      scaled(out, -koszul_sign(d.J.space.parity(i), pd)));
            }
        for (std::size_t v = 0; v < 2; ++v)
            for (std::size_t j = 0; j < nm; ++j) {
                Vec out(n);
                for (std::size_t l = 0; l < nm; ++l)
                    out[lay.v_index(v, l)] = op.mat(nj + l, nj + j);
                b.set(lay.d_index(k), lay.v_index(v, j), out);
                b.set(lay.v_index(v, j), lay.d_index(k),
                      scaled(out, -koszul_sign(d.M.parity(j), pd)));
            }
    }

    // [d, d']
    for (std::size_t k = 0; k < nd; ++k)
        for (std::size_t l = 0; l < nd; ++l) {
            Vec out(n);
            for (std::size_t u = 0; u < nd; ++u) out[lay.d_index(u)] = db.bracket.at(k, l, u);
            b.set(lay.d_index(k), lay.d_index(l), out);
        }

    AssembledLie alg;
    alg.table = AlgebraTable(std::move(space), std::move(b));
    alg.layout = lay;
    alg.provenance = prov;

    // the assembled table must be a Lie superalgebra; anything else is a bug
    CheckResult anti = check_super_anticommutative(alg.table);
    CheckResult jac = check_super_jacobi(alg.table);
    if (!anti.passed() || !jac.passed())
        throw error("assembled algebra fails Lie axioms (assembly bug)");
    return alg;
}

}  // namespace

AssembledLie tkk(const JTernaryData& d) {
    Report pre = check_jternary_full(d);
    if (!pre.passed()) throw construction_error("tkk refused: J-ternary axioms fail", std::move(pre));
    InnDerAlgebra inn = innder_basis(d);
    DBlock db{inn.d_space, inn.ops, inn.bracket, inn.angle_coords, inn.partial_coords};
    AssembledLie alg = assemble(d, std::move(db), Provenance::tkk);
    alg.innder = std::move(inn);
    return alg;
}

AssembledLie tag(const JTernaryData& d) {
    Report pre = check_jternary_full(d);
    if (!pre.passed()) throw construction_error("tag refused: J-ternary axioms fail", std::move(pre));
    BsAlgebra bs = bs_quotient(d);
    DBlock db{bs.space, bs.class_ops, bs.bracket, bs.angle_to_d, bs.partial_to_d};
    AssembledLie alg = assemble(d, std::move(db), Provenance::tag);
    alg.bs = std::move(bs);
    return alg;
}

Sl2Data canonical_block_sl2(const AssembledLie& alg) {
    const Sl2Fixtures& fx = sl2_fixtures();
    const GradedMap* vops[3] = {&fx.E, &fx.H, &fx.F};
    const BlockLayout& lay = alg.layout;
    std::size_t n = lay.dim();
    auto make = [&](std::size_t xidx) {
        Matrix m(n, n);
        for (std::size_t y = 0; y < 3; ++y) {
            Vec xy = fx.sl2.mul(xidx, y);
            for (std::size_t z = 0; z < 3; ++z) {
                if (xy[z] == 0) continue;
                for (std::size_t a = 0; a < lay.dim_j; ++a)
                    m(lay.sl2_index(z, a), lay.sl2_index(y, a)) += xy[z];
            }
        }
        for (std::size_t v = 0; v < 2; ++v) {
            Vec xv = vops[xidx]->apply_basis(v);
            for (std::size_t w = 0; w < 2; ++w) {
                if (xv[w] == 0) continue;
                for (std::size_t j = 0; j < lay.dim_m; ++j)
                    m(lay.v_index(w, j), lay.v_index(v, j)) += xv[w];
            }
        }
        return GradedMap(alg.table.space, alg.table.space, 0, std::move(m));
    };
    return Sl2Data(make(kE), make(kF), make(kH));
}

ModuleQuotient quotient_from_module(const ModuleQuotientInput& in) {
    const AlgebraTable& g = in.g;
    const SuperSpace& mo = in.module;
    std::size_t ng = g.dim(), nmo = mo.dim();
    require_even_table(in.action, g.space, mo, mo, "module action");
    if (in.lambda.domain != mo || in.lambda.codomain != g.space || in.lambda.parity != 0)
        throw error("quotient_from_module: lambda must be an even map module -> g");

    // genuine module action: [x,y].m = x.(y.m) - (-1)^{|x||y|} y.(x.m)
    for (std::size_t x = 0; x < ng; ++x)
        for (std::size_t y = 0; y < ng; ++y)
            for (std::size_t m = 0; m < nmo; ++m) {
                Vec lhs = in.action.apply(g.mul(x, y), unit_vec(nmo, m));
                Vec rhs = in.action.apply(unit_vec(ng, x), in.action.of(y, m));
                add_scaled(rhs, -koszul_sign(g.space.parity(x), g.space.parity(y)),
                           in.action.apply(unit_vec(ng, y), in.action.of(x, m)));
                if (!is_zero_vec(vec_sub(lhs, rhs)))
                    throw error("quotient_from_module: not a module action at (" +
                                g.space.label(x) + ", " + g.space.label(y) + ", " + mo.label(m) + ")");
            }
    // lambda equivariance: lambda(x.m) = [x, lambda(m)]
    for (std::size_t x = 0; x < ng; ++x)
        for (std::size_t m = 0; m < nmo; ++m) {
            Vec lhs = in.lambda.apply(in.action.of(x, m));
            Vec rhs = g.mul(unit_vec(ng, x), in.lambda.apply_basis(m));
            if (!is_zero_vec(vec_sub(lhs, rhs)))
                throw error("quotient_from_module: not a module morphism at (" + g.space.label(x) +
                            ", " + mo.label(m) + ")");
        }

    ModuleQuotient out;
    {
        Matrix rows(0, nmo);
        for (std::size_t i = 0; i < nmo; ++i)
            for (std::size_t j = 0; j < nmo; ++j) {
                Vec v = in.action.apply(in.lambda.apply_basis(i), unit_vec(nmo, j));
                add_scaled(v, koszul_sign(mo.parity(i), mo.parity(j)),
                           in.action.apply(in.lambda.apply_basis(j), unit_vec(nmo, i)));
                rows.append_row(v);
            }
        out.A = Subspace::from_rows(nmo, rows);
    }
    {
        CheckResult r{"quotient.A_in_ker", "lambda vanishes on A(M)"};
        for (std::size_t k = 0; k < out.A.dim(); ++k) {
            r.count();
            if (!is_zero_vec(in.lambda.apply(out.A.basis.row(k))))
                r.violate({"A row " + std::to_string(k)}, "lambda(A) != 0");
        }
        out.checks.add(std::move(r));
    }
    {
        CheckResult r{"quotient.im_ker_in_A", "Im(lambda).Ker(lambda) lies inside A(M)"};
        Subspace ker = kernel(in.lambda.mat);
        for (std::size_t i = 0; i < nmo; ++i)
            for (std::size_t k = 0; k < ker.dim(); ++k) {
                r.count();
                Vec v = in.action.apply(in.lambda.apply_basis(i), ker.basis.row(k));
                if (!out.A.contains(v))
                    r.violate({mo.label(i), "ker row " + std::to_string(k)}, format_combo(mo, v));
            }
        out.checks.add(std::move(r));
    }
    {
        CheckResult r{"quotient.A_invariant", "Im(lambda).A lies inside A(M)"};
        for (std::size_t i = 0; i < nmo; ++i)
            for (std::size_t k = 0; k < out.A.dim(); ++k) {
                r.count();
                Vec v = in.action.apply(in.lambda.apply_basis(i), out.A.basis.row(k));
                if (!out.A.contains(v))
                    r.violate({mo.label(i), "A row " + std::to_string(k)}, format_combo(mo, v));
            }
        out.checks.add(std::move(r));
    }

    out.quotient = quotient_complement(out.A);
    std::size_t nq = out.quotient.representatives.size();
    {
        std::vector<std::string> lab;
        std::vector<int> par;
        for (auto rep : out.quotient.representatives) {
            lab.push_back(mo.label(rep));
            par.push_back(mo.parity(rep));
        }
        out.q_space = SuperSpace(std::move(lab), std::move(par));
    }
    BilinearTable qb(nq, nq, nq);
    for (std::size_t u = 0; u < nq; ++u)
        for (std::size_t v = 0; v < nq; ++v) {
            Vec act = in.action.apply(in.lambda.apply_basis(out.quotient.representatives[u]),
                                      unit_vec(nmo, out.quotient.representatives[v]));
            qb.set(u, v, out.quotient.projection.apply(act));
        }
    out.q = AlgebraTable(out.q_space, std::move(qb));
    {
        CheckResult r = check_super_anticommutative(out.q);
        r.id = "quotient.anticommutative";
        out.checks.add(std::move(r));
        CheckResult j = check_super_jacobi(out.q);
        j.id = "quotient.jacobi";
        out.checks.add(std::move(j));
    }
    {
        Matrix m(ng, nq);
        for (std::size_t u = 0; u < nq; ++u) {
            Vec img = in.lambda.apply_basis(out.quotient.representatives[u]);
            for (std::size_t i = 0; i < ng; ++i) m(i, u) = img[i];
        }
        out.mu = GradedMap(out.q_space, g.space, 0, std::move(m));
    }
    {
        CheckResult r{"quotient.mu_morphism", "mu([p,q]) = [mu(p),mu(q)]"};
        for (std::size_t u = 0; u < nq; ++u)
            for (std::size_t v = 0; v < nq; ++v) {
                r.count();
                Vec lhs = out.mu.apply(out.q.mul(u, v));
                Vec rhs = g.mul(out.mu.apply_basis(u), out.mu.apply_basis(v));
                if (!is_zero_vec(vec_sub(lhs, rhs)))
                    r.violate({out.q_space.label(u), out.q_space.label(v)},
                              format_combo(g.space, vec_sub(lhs, rhs)));
            }
        out.checks.add(std::move(r));
    }
    {
        CheckResult r{"quotient.kernel_central", "ker(mu) brackets to zero with the quotient"};
        Subspace ker = kernel(out.mu.mat);
        for (std::size_t k = 0; k < ker.dim(); ++k)
            for (std::size_t v = 0; v < nq; ++v) {
                r.count();
                Vec a = out.q.mul(ker.basis.row(k), unit_vec(nq, v));
                Vec b = out.q.mul(unit_vec(nq, v), ker.basis.row(k));
                if (!is_zero_vec(a) || !is_zero_vec(b))
                    r.violate({"ker " + std::to_string(k), out.q_space.label(v)},
                              format_combo(out.q_space, is_zero_vec(a) ? b : a));
            }
        out.checks.add(std::move(r));
    }
    return out;
}

MorphismResult tag_on_morphism(const TernaryMorphism& eta, const JTernaryData& src,
                               const JTernaryData& dst) {
    const GradedMap& e1 = eta.eta1;
    const GradedMap& e2 = eta.eta2;
    if (e1.domain != src.J.space || e1.codomain != dst.J.space || e1.parity != 0)
        throw error("tag_on_morphism: eta1 must be an even map J_src -> J_dst");
    if (e2.domain != src.M || e2.codomain != dst.M || e2.parity != 0)
        throw error("tag_on_morphism: eta2 must be an even map M_src -> M_dst");

    std::size_t nj = src.dim_j(), nm = src.dim_m();
    for (std::size_t a = 0; a < nj; ++a)
        for (std::size_t b = 0; b < nj; ++b) {
            Vec lhs = e1.apply(src.J.mul(a, b));
            Vec rhs = dst.J.mul(e1.apply_basis(a), e1.apply_basis(b));
            if (!is_zero_vec(vec_sub(lhs, rhs)))
                throw error("morphism axiom eta1(a·b)=eta1(a)·eta1(b) fails at (" +
                            src.J.space.label(a) + ", " + src.J.space.label(b) + ")");
        }
    for (std::size_t a = 0; a < nj; ++a)
        for (std::size_t m = 0; m < nm; ++m) {
            Vec lhs = e2.apply(src.bullet.of(a, m));
            Vec rhs = dst.bullet.apply(e1.apply_basis(a), e2.apply_basis(m));
            if (!is_zero_vec(vec_sub(lhs, rhs)))
                throw error("morphism axiom eta2(a•m)=eta1(a)•eta2(m) fails at (" +
                            src.J.space.label(a) + ", " + src.M.label(m) + ")");
        }
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t n = 0; n < nm; ++n) {
            Vec lhs = e1.apply(src.star.of(m, n));
            Vec rhs = dst.star.apply(e2.apply_basis(m), e2.apply_basis(n));
            if (!is_zero_vec(vec_sub(lhs, rhs)))
                throw error("morphism axiom eta1(m*n)=eta2(m)*eta2(n) fails at (" +
                            src.M.label(m) + ", " + src.M.label(n) + ")");
        }
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t n = 0; n < nm; ++n)
            for (std::size_t r = 0; r < nm; ++r) {
                Vec lhs = e2.apply(src.triple.of(m, n, r));
                Vec rhs = dst.triple.apply(e2.apply_basis(m), e2.apply_basis(n), e2.apply_basis(r));
                if (!is_zero_vec(vec_sub(lhs, rhs)))
                    throw error("morphism axiom eta2((m,n,r))=(eta2 m,eta2 n,eta2 r) fails at (" +
                                src.M.label(m) + ", " + src.M.label(n) + ", " + src.M.label(r) + ")");
            }

    AssembledLie ts = tag(src), td = tag(dst);
    std::size_t njd = dst.dim_j(), nmd = dst.dim_m();
    TensorAmbient tad{njd, nmd};
    Matrix phi(td.layout.dim(), ts.layout.dim());

    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t i = 0; i < nj; ++i)
            for (std::size_t k = 0; k < njd; ++k)
                phi(td.layout.sl2_index(x, k), ts.layout.sl2_index(x, i)) = e1.mat(k, i);
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t j = 0; j < nm; ++j)
            for (std::size_t k = 0; k < nmd; ++k)
                phi(td.layout.v_index(v, k), ts.layout.v_index(v, j)) = e2.mat(k, j);
    // classes: {z1⊗z2} -> {eta(z1)⊗eta(z2)}, projected onto the target quotient
    for (std::size_t u = 0; u < ts.layout.dim_d; ++u) {
        std::size_t rep = ts.bs->quotient.representatives[u];
        Vec img(tad.dim());
        if (rep < nj * nj) {
            std::size_t i = rep / nj, j = rep % nj;
            for (std::size_t p = 0; p < njd; ++p)
                for (std::size_t q = 0; q < njd; ++q)
                    img[tad.jj(p, q)] += e1.mat(p, i) * e1.mat(q, j);
        } else {
            std::size_t k = rep - nj * nj, i = k / nm, j = k % nm;
            for (std::size_t p = 0; p < nmd; ++p)
                for (std::size_t q = 0; q < nmd; ++q)
                    img[tad.mm(p, q)] += e2.mat(p, i) * e2.mat(q, j);
        }
        Vec cls = td.bs->quotient.projection.apply(img);
        for (std::size_t l = 0; l < td.layout.dim_d; ++l)
            phi(td.layout.d_index(l), ts.layout.d_index(u)) = cls[l];
    }

    MorphismResult out;
    out.map = GradedMap(ts.table.space, td.table.space, 0, std::move(phi));
    CheckResult r{"morphism.lie", "Phi([x,y]) = [Phi(x),Phi(y)] on TAG"};
    std::size_t ns = ts.layout.dim();
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b) {
            r.count();
            Vec lhs = out.map.apply(ts.table.mul(a, b));
            Vec rhs = td.table.mul(out.map.apply_basis(a), out.map.apply_basis(b));
            if (!is_zero_vec(vec_sub(lhs, rhs)))
                r.violate({ts.table.space.label(a), ts.table.space.label(b)},
                          format_combo(td.table.space, vec_sub(lhs, rhs)));
        }
    out.checks.add(std::move(r));
    return out;
}

}  // namespace superlie
