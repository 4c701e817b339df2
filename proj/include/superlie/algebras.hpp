// Structure-constant algebras on super spaces and the axiom checkers for
// super Lie brackets, super Jordan products and special supermodules.
// Bilinear identities are verified on basis tuples only; that is sufficient
// by multilinearity and is the testing strategy used everywhere downstream.
#pragma once

#include "superlie/report.hpp"

#include <cstddef>
#include <vector>

namespace superlie {

/// Structure constants of a bilinear map X (x) Y -> Z.
struct BilinearTable {
    std::size_t nl = 0, nr = 0, nout = 0;
    std::vector<Rat> c;  // nl*nr*nout, index (i,j,k)

    BilinearTable() = default;
    BilinearTable(std::size_t l, std::size_t r, std::size_t out)
        : nl(l), nr(r), nout(out), c(l * r * out) {}

    Rat& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * nr + j) * nout + k]; }
    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * nr + j) * nout + k]; }

    Vec of(std::size_t i, std::size_t j) const;            // image of basis pair
    void set(std::size_t i, std::size_t j, const Vec& v);  // assign image of basis pair
    Vec apply(const Vec& x, const Vec& y) const;           // bilinear extension
    bool is_zero() const;
    bool operator==(const BilinearTable&) const = default;
};

/// Structure constants of a trilinear map M (x) M (x) M -> M.
struct TrilinearTable {
    std::size_t n = 0, nout = 0;
    std::vector<Rat> c;

    TrilinearTable() = default;
    TrilinearTable(std::size_t m, std::size_t out) : n(m), nout(out), c(m * m * m * out) {}

    Rat& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return c[((i * n + j) * n + k) * nout + l];
    }
    const Rat& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return c[((i * n + j) * n + k) * nout + l];
    }

    Vec of(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, const Vec& v);
    Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
    bool is_zero() const;
    bool operator==(const TrilinearTable&) const = default;
};

/// A product on a super space given by structure constants e_i * e_j = sum_k c[i][j][k] e_k.
struct AlgebraTable {
    SuperSpace space;
    BilinearTable product;

    AlgebraTable() = default;
    /// Validates the product is parity-even: c[i][j][k] != 0 forces
    /// parity(k) = parity(i) + parity(j).
    AlgebraTable(SuperSpace s, BilinearTable p);
    static AlgebraTable zero(SuperSpace s);

    std::size_t dim() const { return space.dim(); }
    Vec mul(std::size_t i, std::size_t j) const { return product.of(i, j); }
    Vec mul(const Vec& x, const Vec& y) const { return product.apply(x, y); }
    /// ad(i): y -> e_i * y as a graded map (parity of e_i).
    GradedMap ad(std::size_t i) const;
    /// ad of an arbitrary vector x: y -> x * y (parity-even columns only if x even).
    Matrix ad_matrix(const Vec& x) const;
};

/// Checks a parity-even bilinear table between the given spaces; throws on violation.
void require_even_table(const BilinearTable& t, const SuperSpace& left, const SuperSpace& right,
                        const SuperSpace& out, const std::string& what);
void require_even_table(const TrilinearTable& t, const SuperSpace& m, const std::string& what);

// -- Lie side --------------------------------------------------------------

/// [x,y] = -(-1)^{|x||y|}[y,x] on all basis pairs.
CheckResult check_super_anticommutative(const AlgebraTable& g);

/// [[x,y],z] + (-1)^{|x|(|y|+|z|)}[[y,z],x] + (-1)^{|z|(|x|+|y|)}[[z,x],y] = 0
/// on all basis triples.
CheckResult check_super_jacobi(const AlgebraTable& g);

/// Vectors commuting with the whole algebra.
Subspace center(const AlgebraTable& g);

// -- Jordan side ------------------------------------------------------------

/// Supercommutativity plus the 4-multilinear Jordan identity.
Report check_super_jordan(const AlgebraTable& j);

/// Supercommutativity plus the equivalent operator form: the cyclic relation
/// <a·b,c> + (-1)^{|c|(|a|+|b|)}<c·a,b> + (-1)^{|a|(|b|+|c|)}<b·c,a> = 0
/// evaluated on every basis element, where <a,b>(c) = a·(b·c) - (-1)^{|a||b|}b·(a·c).
/// Agrees with check_super_jordan on every table; the two are kept as mutual oracles.
Report check_super_jordan_via_brackets(const AlgebraTable& j);

/// (a·b)•m = 1/2 (a•(b•m) + (-1)^{|a||b|} b•(a•m)) on all basis triples.
CheckResult check_special_supermodule(const AlgebraTable& j, const SuperSpace& m,
                                      const BilinearTable& bullet);

}  // namespace superlie
