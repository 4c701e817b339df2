// J-ternary superalgebras: a Jordan superalgebra J, a special supermodule M,
// a pairing star: M(x)M -> J and a triple product on M, together with the
// SJT1-SJT6 axiom checker, the inner operators <a,b> and D_{m,n} on J+M, and
// the Lie algebra they span.
#pragma once

#include "superlie/algebras.hpp"

namespace superlie {

struct JTernaryData {
    AlgebraTable J;        // Jordan product ·
    SuperSpace M;
    BilinearTable bullet;  // J (x) M -> M
    BilinearTable star;    // M (x) M -> J
    TrilinearTable triple; // M (x) M (x) M -> M

    JTernaryData() = default;
    /// Validates shapes, parity-even tables, and disjoint J/M labels.
    JTernaryData(AlgebraTable j, SuperSpace m, BilinearTable bul, BilinearTable st,
                 TrilinearTable tr);
    /// All operations zero.
    static JTernaryData zero(AlgebraTable j, SuperSpace m);

    std::size_t dim_j() const { return J.dim(); }
    std::size_t dim_m() const { return M.dim(); }
};

/// J + M with J coordinates first.
SuperSpace jm_space(const JTernaryData& d);

struct InnerOperator {
    enum class Kind { angle, partial };
    Kind kind;
    std::size_t i = 0, j = 0;  // indices into J (angle) or M (partial)
    int parity = 0;            // |i| + |j|
    GradedMap action;          // endomorphism of J + M
};

/// <a,b>: on J, c -> a·(b·c) - (-1)^{|a||b|} b·(a·c);
/// on M, m -> 1/4 (a•(b•m) - (-1)^{|a||b|} b•(a•m)).
InnerOperator angle_op(const JTernaryData& d, std::size_t a, std::size_t b);

/// D_{m,n}: on J, a -> 1/2 ((-1)^{|a|(|m|+|n|)} (a•m)*n - (-1)^{|a||n|} m*(a•n));
/// on M, r -> 1/2 (m*n)•r - (m,n,r).
InnerOperator partial_op(const JTernaryData& d, std::size_t m, std::size_t n);

/// Bilinear extensions in the two arguments (vectors in J resp. M coordinates).
GradedMap angle_action(const JTernaryData& d, const Vec& a, const Vec& b);
GradedMap partial_action(const JTernaryData& d, const Vec& m, const Vec& n);

/// Per-axiom report for SJT1-SJT6 (prefixed by the star antisymmetry check the
/// axioms assume). Parity violations are rejected at JTernaryData construction.
Report check_jternary(const JTernaryData& d);

/// With ·, •, * all zero the axioms collapse to full super-symmetry of the
/// triple product plus the SJT6 associativity law; checks exactly those.
/// Throws if any of ·, •, * is nonzero.
Report check_trivial_ops_symmetry(const JTernaryData& d);

struct InnDerAlgebra {
    SuperSpace jm;                      // ambient J + M
    SuperSpace d_space;                 // labels d0, d1, ...
    Subspace span;                      // flattened endomorphisms, canonical basis
    std::vector<GradedMap> ops;         // span basis rows as operators
    std::vector<InnerOperator> generators;
    BilinearTable angle_coords;         // J (x) J -> span coordinates
    BilinearTable partial_coords;       // M (x) M -> span coordinates
    BilinearTable bracket;              // super-commutator in span coordinates

    std::size_t dim() const { return d_space.dim(); }
};

/// Canonical span of all <a,b> and D_{m,n}; the generator coordinate tables
/// record each generator in the span basis.
InnDerAlgebra innder_basis(const JTernaryData& d);

/// Leibniz laws for every generator over ·, •, * plus the two laws saying the
/// generators derive the operation (r,s) -> D_{r,s} itself.
Report check_derivation_laws(const JTernaryData& d);

/// [D,<a,b>] = <D(a),b> + (-1)^{|a||D|}<a,D(b)> and
/// [D,D_{m,n}] = D_{D(m),n} + (-1)^{|m||D|}D_{m,D(n)} for all generator pairs.
Report check_bracket_closure(const JTernaryData& d);

/// 2<a, m*n> = -D_{a•m,n} + (-1)^{|a||m|} D_{m,a•n} as endomorphisms of J+M.
CheckResult check_angle_partial_compat(const JTernaryData& d);

}  // namespace superlie
