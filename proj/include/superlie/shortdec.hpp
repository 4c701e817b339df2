// The inverse direction: decompose a Lie superalgebra with an sl2 triple into
// its short form (h-eigenvalues -2..2), extract the J-ternary data from the
// bracket, verify all the structural identities inside the algebra, and build
// the canonical morphism from TAG of the extracted data back onto the input.
#pragma once

#include "superlie/constructions.hpp"

namespace superlie {

struct not_short_error : error {
    using error::error;
};
struct not_sl2_error : error {
    using error::error;
};

struct ShortDecomposition {
    AlgebraTable g;
    Sl2Data sl2;
    Subspace J_space;  // h-eigenvalue 2
    Subspace M_space;  // h-eigenvalue 1
    Subspace D_space;  // h-eigenvalue 0 intersected with ker E

    std::size_t dim_j() const { return J_space.dim(); }
    std::size_t dim_m() const { return M_space.dim(); }
    std::size_t dim_d() const { return D_space.dim(); }
};

/// Eigenspace decomposition for h-eigenvalues in {-2,...,2}. Throws
/// not_sl2_error when the operator relations or the derivation property fail,
/// not_short_error (naming the offending eigenvalue) when the five eigenspaces
/// do not exhaust the algebra or the dimension bookkeeping fails.
ShortDecomposition decompose(const AlgebraTable& g, const Sl2Data& sl2);

struct ExtractedOps {
    JTernaryData data;       // a·b = 1/2 [a,fb], a•m = [a,fm], m*n = [m,n], (m,n,r) = -[[m,fn],r]
    BilinearTable angle_g;   // J(x)J -> D coordinates of 1/4 [fa,fb]
    BilinearTable partial_g; // M(x)M -> D coordinates of 1/2 ([m,fn] - [fm,n])
};

/// Throws error("decomposition inconsistent ...") when a product escapes the
/// block it must land in.
ExtractedOps extract_ternary(const ShortDecomposition& dec);

/// Verifies, inside the algebra, the full list of short-structure identities:
/// Jordan and module laws on the extracted data, the Leibniz and composition
/// laws of the invariant block, the bracket formulas of the invariant
/// pairings, the derivation relations, and that the bracket dictionary
/// reproduces the block brackets.
Report verify_short_structure(const ShortDecomposition& dec, const ExtractedOps& ops);

struct PhiResult {
    ShortDecomposition dec;
    ExtractedOps ops;
    AssembledLie tag_alg;   // tag of the extracted data
    GradedMap phi;          // tag_alg -> g
    std::size_t rank = 0;
    bool injective = false, surjective = false;
    Report checks;          // morphism + sl2-equivariance
};

/// Builds tag of the extracted data and the canonical morphism
/// e⊗a -> a, h⊗a -> -fa, f⊗a -> -1/2 f²a, e1⊗m -> m, e2⊗m -> fm,
/// {a⊗b} -> 1/4 [fa,fb], {m⊗n} -> 1/2 ([m,fn]-[fm,n]).
PhiResult phi_map(const AlgebraTable& g, const Sl2Data& sl2);

/// tag(d), decomposed with its canonical block sl2 action, re-extracts data
/// that must match d table-for-table under the identity pairing a -> e⊗a,
/// m -> e1⊗m.
Report roundtrip_check(const JTernaryData& d);

}  // namespace superlie
