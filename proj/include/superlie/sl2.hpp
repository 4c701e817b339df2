// The fixed sl2 machinery: the (e,h,f) bracket table, the Killing form
// kappa(x,y) = 4 tr(xy), the symmetrizer V(x)V -> sl2 and the determinant
// form on V, plus sl2 triples acting on arbitrary super spaces.
#pragma once

#include "superlie/algebras.hpp"

namespace superlie {

// basis order (e, h, f) everywhere
inline constexpr std::size_t kE = 0, kH = 1, kF = 2;
// basis order (e1, e2) of the natural representation V
inline constexpr std::size_t kE1 = 0, kE2 = 1;

struct Sl2Forms {
    Matrix kappa;       // 3x3 on (e,h,f), kappa(h,h)=8, kappa(e,f)=4
    BilinearTable sym;  // symmetrizer V(x)V -> sl2: e1.e1=e, e1.e2=e2.e1=-h/2, e2.e2=-f
    Matrix det;         // 2x2 antisymmetric, det(e1,e2)=1
};

struct Sl2Fixtures {
    AlgebraTable sl2;  // [e,f]=h, [h,e]=2e, [h,f]=-2f
    Sl2Forms forms;
    SuperSpace V;            // even 2-dim space (e1,e2)
    GradedMap E, H, F;       // natural action on V
};

const Sl2Fixtures& sl2_fixtures();

/// An sl2 triple acting on a super space by even operators.
struct Sl2Data {
    GradedMap E, F, H;

    Sl2Data() = default;
    Sl2Data(GradedMap e, GradedMap f, GradedMap h);

    const SuperSpace& space() const { return E.domain; }

    /// [H,E]=2E, [H,F]=-2F, [E,F]=H as operator commutators.
    CheckResult check_relations() const;
    /// E, F, H act as even derivations of the given product.
    CheckResult check_derivations(const AlgebraTable& g) const;
};

/// Build the triple from designated internal elements, E = ad(e) etc.
Sl2Data sl2_from_elements(const AlgebraTable& g, std::size_t e, std::size_t f, std::size_t h);

}  // namespace superlie
