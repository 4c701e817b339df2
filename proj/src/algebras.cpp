#include "superlie/algebras.hpp"

#include <algorithm>

namespace superlie {

Vec BilinearTable::of(std::size_t i, std::size_t j) const {
    Vec v(nout);
    for (std::size_t k = 0; k < nout; ++k) v[k] = at(i, j, k);
    return v;
}

void BilinearTable::set(std::size_t i, std::size_t j, const Vec& v) {
    for (std::size_t k = 0; k < nout; ++k) at(i, j, k) = v[k];
}

Vec BilinearTable::apply(const Vec& x, const Vec& y) const {
    if (x.size() != nl || y.size() != nr) throw error("bilinear apply: dimension mismatch");
    Vec r(nout);
    for (std::size_t i = 0; i < nl; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < nr; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < nout; ++k) r[k] += f * at(i, j, k);
        }
    }
    return r;
}

bool BilinearTable::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

Vec TrilinearTable::of(std::size_t i, std::size_t j, std::size_t k) const {
    Vec v(nout);
    for (std::size_t l = 0; l < nout; ++l) v[l] = at(i, j, k, l);
    return v;
}

void TrilinearTable::set(std::size_t i, std::size_t j, std::size_t k, const Vec& v) {
    for (std::size_t l = 0; l < nout; ++l) at(i, j, k, l) = v[l];
}

Vec TrilinearTable::apply(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != n || y.size() != n || z.size() != n) throw error("trilinear apply: dimension mismatch");
    Vec r(nout);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (z[k] == 0) continue;
                Rat g = f * z[k];
                for (std::size_t l = 0; l < nout; ++l) r[l] += g * at(i, j, k, l);
            }
        }
    }
    return r;
}

bool TrilinearTable::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

AlgebraTable::AlgebraTable(SuperSpace s, BilinearTable p) : space(std::move(s)), product(std::move(p)) {
    if (product.nl != space.dim() || product.nr != space.dim() || product.nout != space.dim())
        throw error("algebra table: shape does not match space");
    require_even_table(product, space, space, space, "product");
}

AlgebraTable AlgebraTable::zero(SuperSpace s) {
    std::size_t n = s.dim();
    return AlgebraTable(std::move(s), BilinearTable(n, n, n));
}

GradedMap AlgebraTable::ad(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) m(k, j) = product.at(i, j, k);
    return GradedMap(space, space, space.parity(i), std::move(m));
}

Matrix AlgebraTable::ad_matrix(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) += x[i] * product.at(i, j, k);
    }
    return m;
}

void require_even_table(const BilinearTable& t, const SuperSpace& left, const SuperSpace& right,
                        const SuperSpace& out, const std::string& what) {
    if (t.nl != left.dim() || t.nr != right.dim() || t.nout != out.dim())
        throw error(what + ": shape does not match spaces");
    for (std::size_t i = 0; i < t.nl; ++i)
        for (std::size_t j = 0; j < t.nr; ++j)
            for (std::size_t k = 0; k < t.nout; ++k)
                if (t.at(i, j, k) != 0 &&
                    out.parity(k) != parity_add(left.parity(i), right.parity(j)))
                    throw error(what + ": parity violation at (" + left.label(i) + ", " +
                                right.label(j) + ") -> " + out.label(k));
}

void require_even_table(const TrilinearTable& t, const SuperSpace& m, const std::string& what) {
    if (t.n != m.dim() || t.nout != m.dim()) throw error(what + ": shape does not match space");
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                for (std::size_t l = 0; l < t.nout; ++l)
                    if (t.at(i, j, k, l) != 0 &&
                        m.parity(l) !=
                            (m.parity(i) + m.parity(j) + m.parity(k)) % 2)
                        throw error(what + ": parity violation at (" + m.label(i) + ", " +
                                    m.label(j) + ", " + m.label(k) + ") -> " + m.label(l));
}

CheckResult check_super_anticommutative(const AlgebraTable& g) {
    CheckResult r{"lie.anticommutative",
                  "[x,y] + (-1)^{|x||y|}[y,x] = 0"};
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            r.count();
            Vec res = g.mul(i, j);
            add_scaled(res, koszul_sign(g.space.parity(i), g.space.parity(j)), g.mul(j, i));
            if (!is_zero_vec(res))
                r.violate({g.space.label(i), g.space.label(j)}, format_combo(g.space, res));
        }
    return r;
}

CheckResult check_super_jacobi(const AlgebraTable& g) {
    CheckResult r{"lie.jacobi",
                  "[[x,y],z] + (-1)^{|x|(|y|+|z|)}[[y,z],x] + (-1)^{|z|(|x|+|y|)}[[z,x],y] = 0"};
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                r.count();
                int pi = g.space.parity(i), pj = g.space.parity(j), pk = g.space.parity(k);
                Vec res = g.mul(g.mul(i, j), unit_vec(n, k));
                add_scaled(res, sign_pow(pi * (pj + pk)), g.mul(g.mul(j, k), unit_vec(n, i)));
                add_scaled(res, sign_pow(pk * (pi + pj)), g.mul(g.mul(k, i), unit_vec(n, j)));
                if (!is_zero_vec(res))
                    r.violate({g.space.label(i), g.space.label(j), g.space.label(k)},
                              format_combo(g.space, res));
            }
    return r;
}

Subspace center(const AlgebraTable& g) {
    std::size_t n = g.dim();
    // stack all products: rows (j,k), columns i, entry c[i][j][k]
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = g.product.at(i, j, k);
    return kernel(m);
}

static CheckResult check_supercommutative(const AlgebraTable& j) {
    CheckResult r{"jordan.supercommutative", "a·b - (-1)^{|a||b|}b·a = 0"};
    std::size_t n = j.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            r.count();
            Vec res = j.mul(a, b);
            add_scaled(res, -koszul_sign(j.space.parity(a), j.space.parity(b)), j.mul(b, a));
            if (!is_zero_vec(res))
                r.violate({j.space.label(a), j.space.label(b)}, format_combo(j.space, res));
        }
    return r;
}

Report check_super_jordan(const AlgebraTable& j) {
    Report rep;
    rep.add(check_supercommutative(j));
    CheckResult r{"jordan.identity",
                  "(a·b)·(c·d) + (-1)^{|b||c|}(a·c)·(b·d) + (-1)^{|b||d|+|c||d|}(a·d)·(b·c) = "
                  "((a·b)·c)·d + (-1)^{|b||c|+|b||d|+|c||d|}((a·d)·c)·b + "
                  "(-1)^{|a||b|+|a||c|+|a||d|+|c||d|}((b·d)·c)·a"};
    std::size_t n = j.dim();
    auto P = [&](std::size_t i) { return j.space.parity(i); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    r.count();
                    Vec lhs = j.mul(j.mul(a, b), j.mul(c, d));
                    add_scaled(lhs, sign_pow(P(b) * P(c)), j.mul(j.mul(a, c), j.mul(b, d)));
                    add_scaled(lhs, sign_pow(P(b) * P(d) + P(c) * P(d)),
                               j.mul(j.mul(a, d), j.mul(b, c)));
                    Vec rhs = j.mul(j.mul(j.mul(a, b), unit_vec(n, c)), unit_vec(n, d));
                    add_scaled(rhs, sign_pow(P(b) * P(c) + P(b) * P(d) + P(c) * P(d)),
                               j.mul(j.mul(j.mul(a, d), unit_vec(n, c)), unit_vec(n, b)));
                    add_scaled(rhs,
                               sign_pow(P(a) * P(b) + P(a) * P(c) + P(a) * P(d) + P(c) * P(d)),
                               j.mul(j.mul(j.mul(b, d), unit_vec(n, c)), unit_vec(n, a)));
                    Vec res = vec_sub(lhs, rhs);
                    if (!is_zero_vec(res))
                        r.violate({j.space.label(a), j.space.label(b), j.space.label(c),
                                   j.space.label(d)},
                                  format_combo(j.space, res));
                }
    rep.add(std::move(r));
    return rep;
}

Report check_super_jordan_via_brackets(const AlgebraTable& j) {
    Report rep;
    rep.add(check_supercommutative(j));
    CheckResult r{"jordan.operator_identity",
                  "<a·b,c>(d) + (-1)^{|c|(|a|+|b|)}<c·a,b>(d) + (-1)^{|a|(|b|+|c|)}<b·c,a>(d) = 0"};
    std::size_t n = j.dim();
    auto P = [&](std::size_t i) { return j.space.parity(i); };
    // <x,y>(d) for vectors x,y of declared parities px,py
    auto angle = [&](const Vec& x, int px, const Vec& y, int py, std::size_t d) {
        Vec v = j.mul(x, j.mul(y, unit_vec(n, d)));
        add_scaled(v, -koszul_sign(px, py), j.mul(y, j.mul(x, unit_vec(n, d))));
        return v;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    r.count();
                    Vec res = angle(j.mul(a, b), parity_add(P(a), P(b)), unit_vec(n, c), P(c), d);
                    add_scaled(res, sign_pow(P(c) * (P(a) + P(b))),
                               angle(j.mul(c, a), parity_add(P(c), P(a)), unit_vec(n, b), P(b), d));
                    add_scaled(res, sign_pow(P(a) * (P(b) + P(c))),
                               angle(j.mul(b, c), parity_add(P(b), P(c)), unit_vec(n, a), P(a), d));
                    if (!is_zero_vec(res))
                        r.violate({j.space.label(a), j.space.label(b), j.space.label(c),
                                   j.space.label(d)},
                                  format_combo(j.space, res));
                }
    rep.add(std::move(r));
    return rep;
}

CheckResult check_special_supermodule(const AlgebraTable& j, const SuperSpace& m,
                                      const BilinearTable& bullet) {
    require_even_table(bullet, j.space, m, m, "bullet");
    CheckResult r{"module.special_action",
                  "(a·b)•m = 1/2 (a•(b•m) + (-1)^{|a||b|} b•(a•m))"};
    std::size_t nj = j.dim(), nm = m.dim();
    for (std::size_t a = 0; a < nj; ++a)
        for (std::size_t b = 0; b < nj; ++b)
            for (std::size_t x = 0; x < nm; ++x) {
                r.count();
                Vec lhs = bullet.apply(j.mul(a, b), unit_vec(nm, x));
                Vec rhs = bullet.apply(unit_vec(nj, a), bullet.of(b, x));
                add_scaled(rhs, koszul_sign(j.space.parity(a), j.space.parity(b)),
                           bullet.apply(unit_vec(nj, b), bullet.of(a, x)));
                add_scaled(lhs, Rat(-1, 2), rhs);
                if (!is_zero_vec(lhs))
                    r.violate({j.space.label(a), j.space.label(b), m.label(x)},
                              format_combo(m, lhs));
            }
    return r;
}

}  // namespace superlie
