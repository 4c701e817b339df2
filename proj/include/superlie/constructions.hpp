// Assembly of short Lie superalgebras from J-ternary data: TKK with the inner
// derivation algebra as invariant block, the relation space R^s, the quotient
// B^s with its central extension onto the inner derivations, and TAG with B^s
// as invariant block. TKK and TAG share one assembly routine parameterized by
// the invariant block and its action, so the two cannot drift apart.
#pragma once

#include "superlie/jternary.hpp"
#include "superlie/sl2.hpp"

#include <optional>

namespace superlie {

/// Prerequisites plus axioms: Jordan, special module, star antisymmetry, SJT1-6.
Report check_jternary_full(const JTernaryData& d);

/// Construction refused because the input data fails its prerequisite checks.
struct construction_error : error {
    Report failed;
    construction_error(const std::string& what, Report r) : error(what), failed(std::move(r)) {}
};

struct BlockLayout {
    std::size_t dim_j = 0, dim_m = 0, dim_d = 0;

    std::size_t dim() const { return 3 * dim_j + 2 * dim_m + dim_d; }
    // sl2 factors ordered (e,h,f), V factors (e1,e2); x-major so the
    // h-eigenvalue-2 block is exactly the leading dim_j coordinates
    std::size_t sl2_index(std::size_t x, std::size_t a) const { return x * dim_j + a; }
    std::size_t v_index(std::size_t v, std::size_t m) const { return 3 * dim_j + v * dim_m + m; }
    std::size_t d_index(std::size_t k) const { return 3 * dim_j + 2 * dim_m + k; }
};

struct BsAlgebra {
    SuperSpace ambient;       // J(x)J + M(x)M flattened, labels {x⊗y}
    Subspace relations;       // R^s(J,M)
    Quotient quotient;        // canonical complement of the relations
    SuperSpace space;         // the quotient classes
    BilinearTable bracket;    // Lie bracket on B^s
    InnDerAlgebra innder;
    GradedMap phi;            // B^s -> inner derivation coordinates
    std::vector<GradedMap> class_ops;  // phi of each class as operator on J+M
    BilinearTable angle_to_d;          // J(x)J -> B^s coordinates, {a⊗b} classes
    BilinearTable partial_to_d;        // M(x)M -> B^s coordinates, {m⊗n} classes
    Report checks;            // well-definedness, Lie axioms, phi properties
};

enum class Provenance { tkk, tag };

struct AssembledLie {
    AlgebraTable table;
    BlockLayout layout;
    Provenance provenance = Provenance::tkk;
    std::optional<InnDerAlgebra> innder;  // tkk
    std::optional<BsAlgebra> bs;          // tag
};

/// Span of the five relation families I_{a,b}, I_{m,n}, I_{a,b,c}, I_{a,m,n},
/// I_{m,n,r,s} inside J(x)J + M(x)M (J block first).
Subspace rs_relations(const JTernaryData& d);

/// Quotient (J(x)J + M(x)M)/R^s with bracket through the inner operator of the
/// first argument. Verifies at construction that the bracket is independent of
/// the chosen lift (raises on failure: that would be an implementation bug),
/// and records phi surjectivity, the Lie morphism property and centrality of
/// ker(phi) in the embedded report.
BsAlgebra bs_quotient(const JTernaryData& d);

/// sl2(x)J + V(x)M + InnDer(J,M). Refuses on axiom failure in d.
AssembledLie tkk(const JTernaryData& d);

/// sl2(x)J + V(x)M + B^s(J,M). Refuses on axiom failure in d.
AssembledLie tag(const JTernaryData& d);

/// The canonical sl2 action on an assembled algebra: [x,-] on sl2 factors,
/// the natural action on V factors, zero on the invariant block.
Sl2Data canonical_block_sl2(const AssembledLie& alg);

// -- generic quotient-from-module construction ------------------------------

struct ModuleQuotientInput {
    AlgebraTable g;        // Lie superalgebra
    SuperSpace module;
    BilinearTable action;  // g (x) module -> module
    GradedMap lambda;      // module -> g, even
};

struct ModuleQuotient {
    Subspace A;          // span of lambda(m).n + (-1)^{|m||n|} lambda(n).m
    Quotient quotient;
    SuperSpace q_space;
    AlgebraTable q;      // bracket [p,q] = lambda(p).q on module/A
    GradedMap mu;        // q -> g
    Report checks;
};

/// Checks the action is a module action and lambda is
/// equivariant (hard errors otherwise), then verifies A ⊆ Ker(lambda),
/// Im(lambda)·Ker(lambda) ⊆ A, the Lie axioms on the quotient, and that mu is
/// a morphism with central kernel.
ModuleQuotient quotient_from_module(const ModuleQuotientInput& in);

// -- functoriality ------------------------------------------------------------

struct TernaryMorphism {
    GradedMap eta1;  // J_src -> J_dst
    GradedMap eta2;  // M_src -> M_dst
};

struct MorphismResult {
    GradedMap map;  // tag(src) -> tag(dst)
    Report checks;
};

/// Checks the morphism axioms (Jordan, bullet, star, triple compatibility;
/// throws naming the failing axiom and tuple), then builds the induced map on
/// TAG and verifies it is a Lie superalgebra morphism.
MorphismResult tag_on_morphism(const TernaryMorphism& eta, const JTernaryData& src,
                               const JTernaryData& dst);

}  // namespace superlie
