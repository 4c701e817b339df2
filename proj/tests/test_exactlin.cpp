#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superlie/exactlin.hpp"

#include <random>

using namespace superlie;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::initializer_list<int> vals) {
    Matrix m(r, c);
    std::size_t k = 0;
    for (int v : vals) m.a[k++] = v;
    return m;
}

// independent oracle: fraction-free (Bareiss) forward elimination over
// integers, then rational back-substitution; a different algorithm on a
// different representation than rref()
Matrix rref_bareiss(const Matrix& input) {
    std::size_t rows = input.rows, cols = input.cols;
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            REQUIRE(denominator(input(i, j)) == 1);
            m[i][j] = numerator(input(i, j));
        }
    Int prev = 1;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    // rational back-substitution on the echelon rows
    std::vector<Vec> rows_q(r, Vec(cols));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) rows_q[i][j] = Rat(m[i][j]);
    for (std::size_t i = r; i-- > 0;) {
        Rat lead = rows_q[i][pivots[i]];
        for (auto& x : rows_q[i]) x /= lead;
        for (std::size_t k = 0; k < i; ++k) {
            Rat f = rows_q[k][pivots[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) rows_q[k][j] -= f * rows_q[i][j];
        }
    }
    Matrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, rows_q[i]);
    return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4/2") == Rat(-2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_str(Rat(-3, 9)) == "-1/3");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_str(parse_rat("-1/2")) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1/0"), error);
    CHECK_THROWS_AS(parse_rat("a"), error);
    CHECK_THROWS_AS(parse_rat("1/"), error);
    CHECK_THROWS_AS(parse_rat(""), error);
    // exactness, no drift: 1/3 summed three times is exactly 1
    Rat third(1, 3);
    CHECK(third + third + third == Rat(1));
}

TEST_CASE("rref on the worked examples") {
    {
        auto r = rref(mat(2, 2, {2, 4, 1, 2}));
        CHECK(r.mat == mat(1, 2, {1, 2}));
        CHECK(r.pivots == std::vector<std::size_t>{0});
    }
    {
        auto r = rref(Matrix::identity(3));
        CHECK(r.mat == Matrix::identity(3));
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    }
    {
        // hand Gaussian elimination: [[1,1],[1,-1]] -> identity
        auto r = rref(mat(2, 2, {1, 1, 1, -1}));
        CHECK(r.mat == Matrix::identity(2));
    }
}

TEST_CASE("rref is idempotent and matches the fraction-free oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dims(1, 6), vals(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dims(rng), c = dims(rng);
        Matrix m(r, c);
        for (auto& x : m.a) x = vals(rng);
        Rref ours = rref(m);
        CHECK(rref(ours.mat).mat == ours.mat);
        CHECK(ours.mat == rref_bareiss(m));
        // rank-nullity
        CHECK(kernel(m).dim() + ours.pivots.size() == c);
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix(2, 2)).dim() == 2);
    CHECK(kernel(Matrix::identity(3)).dim() == 0);
    Subspace k = kernel(mat(1, 2, {1, 1}));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis.row(0) == Vec{Rat(1), Rat(-1)});
}

TEST_CASE("subspace membership and coordinates") {
    Subspace s = Subspace::from_rows(3, mat(2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(s.contains(Vec{Rat(2), Rat(3), Rat(5)}));
    CHECK_FALSE(s.contains(Vec{Rat(1), Rat(0), Rat(0)}));
    auto c = s.coordinates(Vec{Rat(2), Rat(3), Rat(5)});
    REQUIRE(c.has_value());
    CHECK(*c == Vec{Rat(2), Rat(3)});
}

TEST_CASE("subspace intersection") {
    Subspace a = Subspace::from_rows(3, mat(2, 3, {1, 0, 0, 0, 1, 0}));
    Subspace b = Subspace::from_rows(3, mat(2, 3, {0, 1, 0, 0, 0, 1}));
    Subspace i = a.intersect(b);
    REQUIRE(i.dim() == 1);
    CHECK(i.basis.row(0) == Vec{Rat(0), Rat(1), Rat(0)});
    CHECK(a.intersect(Subspace::zero(3)).dim() == 0);
    CHECK(a.intersect(Subspace::full(3)) == a);
}

TEST_CASE("quotient complement") {
    {
        Quotient q = quotient_complement(Subspace::zero(2));
        CHECK(q.representatives == std::vector<std::size_t>{0, 1});
        CHECK(q.projection == Matrix::identity(2));
    }
    {
        // relations = span{e0 + e1}: e0 is identified with -e1
        Quotient q = quotient_complement(Subspace::from_rows(2, mat(1, 2, {1, 1})));
        CHECK(q.representatives == std::vector<std::size_t>{1});
        CHECK(q.projection == mat(1, 2, {-1, 1}));
    }
    {
        Quotient q = quotient_complement(Subspace::full(2));
        CHECK(q.representatives.empty());
        CHECK(q.projection.rows == 0);
    }
}

TEST_CASE("quotient complement properties on random relation spaces") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dims(1, 6), vals(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = dims(rng), k = dims(rng);
        Matrix rows(k, n);
        for (auto& x : rows.a) x = vals(rng);
        Subspace rel = Subspace::from_rows(n, rows);
        Quotient q = quotient_complement(rel);
        // projection annihilates every relation row
        for (std::size_t i = 0; i < rel.dim(); ++i)
            CHECK(is_zero_vec(q.projection.apply(rel.basis.row(i))));
        // projection . inclusion = identity on the complement
        for (std::size_t i = 0; i < q.representatives.size(); ++i) {
            Vec img = q.projection.apply(unit_vec(n, q.representatives[i]));
            CHECK(img == unit_vec(q.representatives.size(), i));
        }
        CHECK(rel.dim() + q.representatives.size() == n);
    }
}

TEST_CASE("eigenspace examples") {
    Matrix d(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 1;
    Subspace e2 = eigenspace(d, 2);
    REQUIRE(e2.dim() == 1);
    CHECK(e2.basis.row(0) == Vec{Rat(1), Rat(0), Rat(0)});
    CHECK(eigenspace(d, 3).dim() == 0);
    // ad(h) on the (e,h,f) basis: [h,e]=2e, [h,f]=-2f
    Matrix adh(3, 3);
    adh(0, 0) = 2;
    adh(2, 2) = -2;
    Subspace top = eigenspace(adh, 2);
    REQUIRE(top.dim() == 1);
    CHECK(top.basis.row(0) == Vec{Rat(1), Rat(0), Rat(0)});
}
