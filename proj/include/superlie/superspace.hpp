// Parity-graded vector spaces, homogeneous linear maps between them, and the
// Koszul sign that every bracket and identity in this library routes through.
#pragma once

#include "superlie/exactlin.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superlie {

// Parities live in Z/2, kept as plain 0/1 so sign exponents stay readable.
inline int parity_add(int p, int q) { return (p + q) & 1; }

/// (-1)^{pq} as a scalar; the sign picked up when two odd symbols swap.
inline Rat koszul_sign(int p, int q) { return ((p & q & 1) != 0) ? Rat(-1) : Rat(1); }

struct SuperSpace {
    std::vector<std::string> labels;
    std::vector<int> parities;

    SuperSpace() = default;
    SuperSpace(std::vector<std::string> lab, std::vector<int> par);

    std::size_t dim() const { return labels.size(); }
    const std::string& label(std::size_t i) const { return labels[i]; }
    int parity(std::size_t i) const { return parities[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool operator==(const SuperSpace&) const = default;

    static SuperSpace direct_sum(const SuperSpace& a, const SuperSpace& b);
};

/// Parity of a vector supported on a single parity; nullopt for mixed support.
/// The zero vector counts as even.
std::optional<int> homogeneous_parity(const SuperSpace& s, const Vec& v);

struct GradedMap {
    SuperSpace domain, codomain;
    int parity = 0;
    Matrix mat;  // codomain.dim() x domain.dim(); column j = image of basis j

    GradedMap() = default;
    /// Validates the parity pattern: a nonzero entry (i,j) needs
    /// parity(codomain i) = parity(domain j) + parity.
    GradedMap(SuperSpace dom, SuperSpace cod, int par, Matrix m);

    static GradedMap zero(const SuperSpace& dom, const SuperSpace& cod, int par);
    static GradedMap identity(const SuperSpace& s);

    Vec apply(const Vec& x) const { return mat.apply(x); }
    Vec apply_basis(std::size_t j) const;
    bool is_zero() const { return mat.is_zero(); }
    bool operator==(const GradedMap&) const = default;

    GradedMap operator+(const GradedMap& rhs) const;
    GradedMap operator-(const GradedMap& rhs) const;
    GradedMap scaled(const Rat& c) const;
};

/// f . g; needs domain(f) = codomain(g). Parity adds.
GradedMap compose_graded(const GradedMap& f, const GradedMap& g);

/// f.g - (-1)^{|f||g|} g.f for endomorphisms of one space.
GradedMap super_commutator(const GradedMap& f, const GradedMap& g);

/// Pairs (i,j) of a factor space flattened to i*dim+j, with additive parity.
struct TensorSquare {
    SuperSpace factor;

    explicit TensorSquare(SuperSpace f) : factor(std::move(f)) {}
    std::size_t dim() const { return factor.dim() * factor.dim(); }
    std::size_t flat(std::size_t i, std::size_t j) const { return i * factor.dim() + j; }
    std::pair<std::size_t, std::size_t> unflatten(std::size_t k) const {
        return {k / factor.dim(), k % factor.dim()};
    }
    int parity(std::size_t k) const {
        auto [i, j] = unflatten(k);
        return parity_add(factor.parity(i), factor.parity(j));
    }
    /// Labels like "{x⊗y}".
    SuperSpace as_superspace() const;
};

}  // namespace superlie
