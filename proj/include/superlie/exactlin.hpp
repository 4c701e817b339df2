// Dense exact linear algebra: matrices over Rat, reduced row echelon form with
// leftmost-pivot tie-breaking, kernels, canonical quotient complements.
// Dimensions stay small (a few hundred at most), so everything is dense.
#pragma once

#include "superlie/rat.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace superlie {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec& add_scaled(Vec& dst, const Rat& c, const Vec& src);  // dst += c*src
Vec scaled(const Vec& v, const Rat& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major, size rows*cols

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static Matrix identity(std::size_t n);

    Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const Matrix&) const = default;
    bool is_zero() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rat& c) const;
    Matrix transposed() const;

    Vec apply(const Vec& x) const;  // this * x
    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);
    void append_row(const Vec& v);

    /// Rows as one flat vector (used to treat an endomorphism as a vector).
    Vec flattened() const { return a; }
    static Matrix from_flat(std::size_t r, std::size_t c, const Vec& flat);
};

struct Rref {
    Matrix mat;                       // RREF with zero rows removed
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Gauss-Jordan over Rat; pivots are the leftmost possible columns.
Rref rref(const Matrix& m);

struct Subspace {
    std::size_t ambient = 0;
    Matrix basis;  // RREF basis, one row per dimension
    std::vector<std::size_t> pivots;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace from_rows(std::size_t ambient, const Matrix& rows);

    std::size_t dim() const { return basis.rows; }
    bool operator==(const Subspace&) const = default;  // RREF basis is canonical

    bool contains(const Vec& v) const;
    /// Coefficients of v in the RREF basis, or nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
};

/// Basis of { x : m x = 0 }, canonicalized.
Subspace kernel(const Matrix& m);

/// kernel(m - lambda*I); m must be square.
Subspace eigenspace(const Matrix& m, const Rat& lambda);

struct Quotient {
    std::vector<std::size_t> representatives;  // non-pivot ambient coordinates
    Matrix projection;                         // (ambient - rank) x ambient
};

/// Canonical complement of a relation subspace: representatives are the
/// non-pivot coordinates, projection maps the ambient onto their span modulo
/// the relations, and projection . inclusion = id.
Quotient quotient_complement(const Subspace& relations);

}  // namespace superlie
