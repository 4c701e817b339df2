#include <doctest.h>

#include "fixtures.hpp"
#include "superlie/algebras.hpp"

#include <random>

using namespace superlie;
using namespace superlie::testfx;

namespace {

AlgebraTable jordan_c() {
    TableBuilder b({"one"}, {0});
    b.set("one", "one", "one", 1);
    return b.done();
}

}  // namespace

TEST_CASE("algebra table rejects parity violations") {
    SuperSpace s({"x", "y"}, {0, 1});
    BilinearTable t(2, 2, 2);
    t.at(0, 0, 1) = 1;  // even·even landing in odd
    CHECK_THROWS_AS(AlgebraTable(s, t), error);
}

TEST_CASE("anticommutativity checker") {
    CHECK(check_super_anticommutative(sl2_fixtures().sl2).passed());
    CHECK(check_super_anticommutative(lie_h3()).passed());
    // a symmetric product fails: for J = C with 1·1 = 1
    CheckResult r = check_super_anticommutative(jordan_c());
    CHECK_FALSE(r.passed());
    CHECK(r.violations.front().where == std::vector<std::string>{"one", "one"});
}

TEST_CASE("jacobi checker") {
    CHECK(check_super_jacobi(sl2_fixtures().sl2).passed());
    CHECK(check_super_jacobi(lie_h3()).passed());
    CHECK(check_super_jacobi(lie_sl3()).passed());
    CHECK(check_super_jacobi(lie_sl2_plus_v3()).passed());
    // perturb one structure constant of sl2: [e,f] = h + e breaks Jacobi
    AlgebraTable broken = sl2_fixtures().sl2;
    broken.product.at(kE, kF, kE) = 1;
    CHECK_FALSE(check_super_jacobi(broken).passed());
}

TEST_CASE("center computation") {
    Subspace z = center(lie_h3());
    REQUIRE(z.dim() == 1);
    CHECK(z.basis.row(0) == Vec{Rat(0), Rat(0), Rat(1)});
    CHECK(center(sl2_fixtures().sl2).dim() == 0);
}

TEST_CASE("jordan checkers on the fixtures") {
    // C with 1·1=1 is associative commutative, hence Jordan; it is not a Lie bracket
    CHECK(check_super_jordan(jordan_c()).passed());
    CHECK(check_super_jordan_via_brackets(jordan_c()).passed());

    AlgebraTable lam = jordan_lambda();
    CHECK(check_super_jordan(lam).passed());
    CHECK(check_super_jordan_via_brackets(lam).passed());

    // flip one sign in the exterior-algebra fixture: zs·z = +w breaks
    // supercommutativity (and with it the Jordan structure)
    AlgebraTable bad = lam;
    bad.product.at(*lam.space.index_of("zs"), *lam.space.index_of("z"),
                   *lam.space.index_of("w")) = 1;
    Report r1 = check_super_jordan(bad);
    Report r2 = check_super_jordan_via_brackets(bad);
    CHECK_FALSE(r1.passed());
    CHECK_FALSE(r2.passed());
}

TEST_CASE("the two jordan checkers agree on random supercommutative tables") {
    // property: identical verdicts on every table (they are mutual oracles)
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> vals(-2, 2);
    SuperSpace s({"p", "q"}, {0, 1});
    int disagreements = 0, jordan_hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
        BilinearTable t(2, 2, 2);
        // random parity-even supercommutative table
        t.at(0, 0, 0) = vals(rng);             // p·p in p
        t.at(1, 1, 0) = vals(rng);             // q·q in p... (odd·odd = even)
        t.at(0, 1, 1) = vals(rng);             // p·q in q
        t.at(1, 0, 1) = t.at(0, 1, 1);         // q·p = p·q (|p||q| = 0)
        AlgebraTable a(s, t);
        bool v1 = check_super_jordan(a).passed();
        bool v2 = check_super_jordan_via_brackets(a).passed();
        if (v1 != v2) ++disagreements;
        if (v1) ++jordan_hits;
    }
    CHECK(disagreements == 0);
    CHECK(jordan_hits > 0);  // the sweep saw actual Jordan algebras
}

TEST_CASE("every supercommutative associative table passes the jordan check") {
    CHECK(check_super_jordan(jordan_lambda()).passed());
    CHECK(check_super_jordan(jordan_c()).passed());
}

TEST_CASE("special supermodule checker") {
    // J = C acting on an even line and on an odd line
    SuperSpace even_m({"m"}, {0}), odd_m({"w"}, {1});
    BilinearTable act(1, 1, 1);
    act.at(0, 0, 0) = 1;
    CHECK(check_special_supermodule(jordan_c(), even_m, act).passed());
    CHECK(check_special_supermodule(jordan_c(), odd_m, act).passed());
    // scaling the action to 1•m = 2m breaks the law: 2 != 1/2(4+4)/... exactly
    BilinearTable doubled(1, 1, 1);
    doubled.at(0, 0, 0) = 2;
    CheckResult r = check_special_supermodule(jordan_c(), even_m, doubled);
    CHECK_FALSE(r.passed());
}

TEST_CASE("sl2 data from designated elements") {
    Sl2Data d = sl2_from_elements(sl2_fixtures().sl2, kE, kF, kH);
    CHECK(d.check_relations().passed());
    CHECK(d.check_derivations(sl2_fixtures().sl2).passed());
}
