#include "superlie/sl2.hpp"

namespace superlie {

static Sl2Fixtures make_fixtures() {
    Sl2Fixtures fx;

    SuperSpace s({"e", "h", "f"}, {0, 0, 0});
    BilinearTable br(3, 3, 3);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) { br.at(i, j, k) = v; };
    set(kE, kF, kH, 1);   // [e,f] = h
    set(kF, kE, kH, -1);
    set(kH, kE, kE, 2);   // [h,e] = 2e
    set(kE, kH, kE, -2);
    set(kH, kF, kF, -2);  // [h,f] = -2f
    set(kF, kH, kF, 2);
    fx.sl2 = AlgebraTable(s, std::move(br));

    // kappa(x,y) = 4 tr(xy) on (e,h,f)
    fx.forms.kappa = Matrix(3, 3);
    fx.forms.kappa(kE, kF) = 4;
    fx.forms.kappa(kF, kE) = 4;
    fx.forms.kappa(kH, kH) = 8;

    fx.forms.sym = BilinearTable(2, 2, 3);
    fx.forms.sym.at(kE1, kE1, kE) = 1;            // e1.e1 = e
    fx.forms.sym.at(kE1, kE2, kH) = Rat(-1, 2);   // e1.e2 = -h/2
    fx.forms.sym.at(kE2, kE1, kH) = Rat(-1, 2);
    fx.forms.sym.at(kE2, kE2, kF) = -1;           // e2.e2 = -f

    fx.forms.det = Matrix(2, 2);
    fx.forms.det(kE1, kE2) = 1;
    fx.forms.det(kE2, kE1) = -1;

    fx.V = SuperSpace({"e1", "e2"}, {0, 0});
    Matrix me(2, 2), mh(2, 2), mf(2, 2);
    me(0, 1) = 1;   // e: e2 -> e1
    mh(0, 0) = 1;   // h: e1 -> e1, e2 -> -e2
    mh(1, 1) = -1;
    mf(1, 0) = 1;   // f: e1 -> e2
    fx.E = GradedMap(fx.V, fx.V, 0, me);
    fx.H = GradedMap(fx.V, fx.V, 0, mh);
    fx.F = GradedMap(fx.V, fx.V, 0, mf);
    return fx;
}

const Sl2Fixtures& sl2_fixtures() {
    static const Sl2Fixtures fx = make_fixtures();
    return fx;
}

Sl2Data::Sl2Data(GradedMap e, GradedMap f, GradedMap h) : E(std::move(e)), F(std::move(f)), H(std::move(h)) {
    if (E.domain != F.domain || E.domain != H.domain || E.domain != E.codomain ||
        F.domain != F.codomain || H.domain != H.codomain)
        throw error("sl2 data: E, F, H must be endomorphisms of one space");
    if (E.parity != 0 || F.parity != 0 || H.parity != 0)
        throw error("sl2 data: E, F, H must be even");
}

CheckResult Sl2Data::check_relations() const {
    CheckResult r{"sl2.relations", "[H,E]=2E, [H,F]=-2F, [E,F]=H as operators"};
    r.tuples = 3;
    auto comm = [](const GradedMap& a, const GradedMap& b) { return a.mat * b.mat - b.mat * a.mat; };
    if (comm(H, E) != E.mat.scaled(2)) r.violate({"H", "E"}, "[H,E] - 2E != 0");
    if (comm(H, F) != F.mat.scaled(-2)) r.violate({"H", "F"}, "[H,F] + 2F != 0");
    if (comm(E, F) != H.mat) r.violate({"E", "F"}, "[E,F] - H != 0");
    return r;
}

CheckResult Sl2Data::check_derivations(const AlgebraTable& g) const {
    CheckResult r{"sl2.derivations", "X([y,z]) = [X(y),z] + [y,X(z)] for X in {E,F,H}"};
    if (g.space != space()) throw error("sl2 derivation check: space mismatch");
    std::size_t n = g.dim();
    const char* names[3] = {"E", "F", "H"};
    const GradedMap* ops[3] = {&E, &F, &H};
    for (int t = 0; t < 3; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                r.count();
                Vec res = ops[t]->apply(g.mul(i, j));
                add_scaled(res, -1, g.mul(ops[t]->apply_basis(i), unit_vec(n, j)));
                add_scaled(res, -1, g.mul(unit_vec(n, i), ops[t]->apply_basis(j)));
                if (!is_zero_vec(res))
                    r.violate({names[t], g.space.label(i), g.space.label(j)},
                              format_combo(g.space, res));
            }
    return r;
}

Sl2Data sl2_from_elements(const AlgebraTable& g, std::size_t e, std::size_t f, std::size_t h) {
    if (g.space.parity(e) != 0 || g.space.parity(f) != 0 || g.space.parity(h) != 0)
        throw error("sl2 elements must be even");
    return Sl2Data(g.ad(e), g.ad(f), g.ad(h));
}

}  // namespace superlie
