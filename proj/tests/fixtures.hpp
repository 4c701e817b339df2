// Seeds and algebras shared across the test suites. Everything here is built
// from first principles (elementary matrices, exterior algebra products) so it
// can serve as an independent source of expected values.
#pragma once

#include "superlie/constructions.hpp"
#include "superlie/jternary.hpp"
#include "superlie/sl2.hpp"

#include <array>
#include <map>

namespace superlie::testfx {

struct TableBuilder {
    SuperSpace s;
    BilinearTable t;

    TableBuilder(std::vector<std::string> labels, std::vector<int> parities)
        : s(std::move(labels), std::move(parities)), t(s.dim(), s.dim(), s.dim()) {}

    std::size_t idx(const std::string& l) const { return *s.index_of(l); }
    void set(const std::string& l, const std::string& r, const std::string& out, Rat c) {
        t.at(idx(l), idx(r), idx(out)) = c;
    }
    AlgebraTable done() { return AlgebraTable(s, t); }
};

// J = <a> with a·a=a, M = <m1,m2> even, a•mi=mi, m1*m2=a,
// triples (m1,m2,m1)=2m1, (m1,m2,m2)=-m2, (m2,m1,m1)=m1, (m2,m1,m2)=-2m2
inline JTernaryData jt_sl3() {
    TableBuilder jb({"a"}, {0});
    jb.set("a", "a", "a", 1);
    SuperSpace M({"m1", "m2"}, {0, 0});
    BilinearTable bullet(1, 2, 2), star(2, 2, 1);
    bullet.at(0, 0, 0) = 1;
    bullet.at(0, 1, 1) = 1;
    star.at(0, 1, 0) = 1;
    star.at(1, 0, 0) = -1;
    TrilinearTable triple(2, 2);
    triple.at(0, 1, 0, 0) = 2;
    triple.at(0, 1, 1, 1) = -1;
    triple.at(1, 0, 0, 0) = 1;
    triple.at(1, 0, 1, 1) = -2;
    return JTernaryData(jb.done(), M, bullet, star, triple);
}

// J = 0, M = <m0> even, all operations zero
inline JTernaryData jt_heisenberg() {
    return JTernaryData::zero(AlgebraTable(SuperSpace({}, {}), BilinearTable(0, 0, 0)),
                              SuperSpace({"m0"}, {0}));
}

// J = <u> = M = <m0>, both even: u·u=u, u•m0=m0, star and triple zero
inline JTernaryData jt_semidirect() {
    TableBuilder jb({"u"}, {0});
    jb.set("u", "u", "u", 1);
    SuperSpace M({"m0"}, {0});
    BilinearTable bullet(1, 1, 1), star(1, 1, 1);
    bullet.at(0, 0, 0) = 1;
    return JTernaryData(jb.done(), M, bullet, star, TrilinearTable(1, 1));
}

// J = <u> even, M = <w> odd: u·u=u, u•w=w, w*w=u, (w,w,w)=w/2
inline JTernaryData jt_osp() {
    TableBuilder jb({"u"}, {0});
    jb.set("u", "u", "u", 1);
    SuperSpace M({"w"}, {1});
    BilinearTable bullet(1, 1, 1), star(1, 1, 1);
    bullet.at(0, 0, 0) = 1;
    star.at(0, 0, 0) = 1;
    TrilinearTable triple(1, 1);
    triple.at(0, 0, 0, 0) = Rat(1, 2);
    return JTernaryData(jb.done(), M, bullet, star, triple);
}

// the exterior algebra on two odd generators z, zs with unit: basis
// (one, z, zs, w) of parities (0,1,1,0), w = z·zs
inline AlgebraTable jordan_lambda() {
    TableBuilder b({"one", "z", "zs", "w"}, {0, 1, 1, 0});
    for (const char* x : {"one", "z", "zs", "w"}) {
        b.set("one", x, x, 1);
        if (std::string(x) != "one") b.set(x, "one", x, 1);
    }
    b.set("z", "zs", "w", 1);
    b.set("zs", "z", "w", -1);
    return b.done();
}

// spin factor on a hyperbolic plane: unit plus p, q with p·q = q·p = one;
// Jordan but not associative, so it has nonzero inner derivations
inline AlgebraTable jordan_spin() {
    TableBuilder b({"one", "p", "q"}, {0, 0, 0});
    for (const char* x : {"one", "p", "q"}) {
        b.set("one", x, x, 1);
        if (std::string(x) != "one") b.set(x, "one", x, 1);
    }
    b.set("p", "q", "one", 1);
    b.set("q", "p", "one", 1);
    return b.done();
}

inline AlgebraTable lie_h3() {
    TableBuilder b({"x1", "x2", "z"}, {0, 0, 0});
    b.set("x1", "x2", "z", 1);
    b.set("x2", "x1", "z", -1);
    return b.done();
}

// sl3 from elementary 3x3 matrices, basis (E12,E13,E23,H12,H23,E21,E31,E32)
inline AlgebraTable lie_sl3() {
    using Mat3 = std::array<std::array<int, 3>, 3>;
    auto E = [](int i, int j) {
        Mat3 m{};
        m[i][j] = 1;
        return m;
    };
    std::vector<std::string> labels{"E12", "E13", "E23", "H12", "H23", "E21", "E31", "E32"};
    std::vector<Mat3> basis{E(0, 1), E(0, 2), E(1, 2), {}, {}, E(1, 0), E(2, 0), E(2, 1)};
    basis[3][0][0] = 1;
    basis[3][1][1] = -1;  // H12
    basis[4][1][1] = 1;
    basis[4][2][2] = -1;  // H23
    auto comm = [](const Mat3& a, const Mat3& b) {
        Mat3 c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
        return c;
    };
    // coordinates in the chosen basis: off-diagonal entries directly, diagonal
    // part diag(d1,d2,d3) (traceless) = d1*H12 - d3*H23
    auto coords = [&](const Mat3& m) {
        Vec v(8);
        v[0] = m[0][1];
        v[1] = m[0][2];
        v[2] = m[1][2];
        v[3] = m[0][0];
        v[4] = -m[2][2];
        v[5] = m[1][0];
        v[6] = m[2][0];
        v[7] = m[2][1];
        return v;
    };
    SuperSpace s(labels, std::vector<int>(8, 0));
    BilinearTable t(8, 8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) t.set(i, j, coords(comm(basis[i], basis[j])));
    return AlgebraTable(s, t);
}

// sl2 with the 4-dimensional irreducible module adjoined as an abelian ideal;
// h-eigenvalues on the module are 3,1,-1,-3, so this is not short
inline AlgebraTable lie_sl2_plus_v3() {
    TableBuilder b({"e", "h", "f", "v0", "v1", "v2", "v3"}, {0, 0, 0, 0, 0, 0, 0});
    b.set("e", "f", "h", 1);
    b.set("f", "e", "h", -1);
    b.set("h", "e", "e", 2);
    b.set("e", "h", "e", -2);
    b.set("h", "f", "f", -2);
    b.set("f", "h", "f", 2);
    const char* v[4] = {"v0", "v1", "v2", "v3"};
    for (int i = 0; i < 4; ++i) {
        b.set("h", v[i], v[i], 3 - 2 * i);
        b.set(v[i], "h", v[i], -(3 - 2 * i));
        if (i < 3) {
            b.set("f", v[i], v[i + 1], 1);
            b.set(v[i], "f", v[i + 1], -1);
        }
        if (i > 0) {
            b.set("e", v[i], v[i - 1], i * (4 - i));
            b.set(v[i], "e", v[i - 1], -i * (4 - i));
        }
    }
    return b.done();
}

// the pre-quotient B^s module over the inner derivations with lambda = phi,
// the class action re-derived here independently of the construction code
inline ModuleQuotientInput bs_module_input(const JTernaryData& d, const BsAlgebra& bs) {
    std::size_t nb = bs.space.dim(), nd = bs.innder.dim();
    std::size_t nj = d.dim_j(), nm = d.dim_m();
    auto act_on_class = [&](const GradedMap& op, int op_parity, std::size_t cls) {
        std::size_t rep = bs.quotient.representatives[cls];
        Vec img(nj * nj + nm * nm);
        if (rep < nj * nj) {
            std::size_t i = rep / nj, j = rep % nj;
            for (std::size_t k = 0; k < nj; ++k) {
                img[k * nj + j] += op.mat(k, i);
                img[i * nj + k] += Rat(sign_pow(op_parity * d.J.space.parity(i))) * op.mat(k, j);
            }
        } else {
            std::size_t t = rep - nj * nj, i = t / nm, j = t % nm;
            for (std::size_t k = 0; k < nm; ++k) {
                img[nj * nj + k * nm + j] += op.mat(nj + k, nj + i);
                img[nj * nj + i * nm + k] +=
                    Rat(sign_pow(op_parity * d.M.parity(i))) * op.mat(nj + k, nj + j);
            }
        }
        return bs.quotient.projection.apply(img);
    };
    BilinearTable action(nd, nb, nb);
    for (std::size_t k = 0; k < nd; ++k)
        for (std::size_t v = 0; v < nb; ++v)
            action.set(k, v, act_on_class(bs.innder.ops[k], bs.innder.d_space.parity(k), v));
    return {AlgebraTable(bs.innder.d_space, bs.innder.bracket), bs.space, action, bs.phi};
}

}  // namespace superlie::testfx
