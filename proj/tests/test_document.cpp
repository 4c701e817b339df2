#include <doctest.h>

#include "fixtures.hpp"
#include "superlie/document.hpp"

using namespace superlie;
using namespace superlie::testfx;
using nlohmann::json;

namespace {

std::string fx(const char* name) { return std::string(SUPERLIE_FIXTURE_DIR "/") + name; }

}  // namespace

TEST_CASE("the sl3 fixture file matches the table derived from elementary matrices") {
    AlgebraDocument doc = load_document(fx("sl3.json"));
    AlgebraTable g = doc.algebra("bracket");
    AlgebraTable oracle = lie_sl3();
    REQUIRE(g.space == oracle.space);
    CHECK(g.product == oracle.product);
}

TEST_CASE("document parsing rejects malformed input") {
    CHECK_THROWS_AS(load_document(fx("no_such_file.json")), error);
    CHECK_THROWS_WITH_AS(AlgebraDocument::parse(json{{"basis", 3}}),
                         doctest::Contains("basis"), error);
    json bad = {{"basis", json::array({{{"label", "x"}, {"parity", 5}}})}};
    CHECK_THROWS_WITH_AS(AlgebraDocument::parse(bad), doctest::Contains("parity"), error);
    json badc = {{"basis", json::array({{{"label", "x"}, {"parity", 0}}})},
                 {"products",
                  {{"bracket", json::array({{{"left", "x"},
                                             {"right", "x"},
                                             {"result", json::array({{{"basis", "x"},
                                                                      {"coeff", "1/q"}}})}}})}}}};
    CHECK_THROWS_WITH_AS(AlgebraDocument::parse(badc), doctest::Contains("rational"), error);
}

TEST_CASE("ternary documents resolve spaces") {
    AlgebraDocument doc = load_document(fx("sl3_ternary.json"));
    JTernaryData d = doc.as_ternary();
    JTernaryData want = jt_sl3();
    CHECK(d.J.product == want.J.product);
    CHECK(d.bullet == want.bullet);
    CHECK(d.star == want.star);
    CHECK(d.triple == want.triple);
}

TEST_CASE("serialization round-trips and re-passes the checks that produced it") {
    JTernaryData d = jt_osp();
    AlgebraDocument doc = document_from_ternary(d, "osp-reemitted");
    AlgebraDocument back = AlgebraDocument::parse(doc.to_json());
    JTernaryData d2 = back.as_ternary();
    CHECK(d2.J.product == d.J.product);
    CHECK(d2.bullet == d.bullet);
    CHECK(d2.star == d.star);
    CHECK(d2.triple == d.triple);
    CHECK(check_jternary_full(d2).passed());

    AssembledLie t = tag(d);
    AlgebraDocument emitted = document_from_assembled(t, "osp-tag");
    AlgebraDocument parsed = AlgebraDocument::parse(emitted.to_json());
    AlgebraTable g = parsed.algebra("bracket");
    CHECK(g.product == t.table.product);
    CHECK(check_super_jacobi(g).passed());
}

TEST_CASE("cmd_check statuses and exit codes") {
    CHECK(cmd_check(fx("sl3_ternary.json"), "ternary").exit_code() == 0);
    CHECK(cmd_check(fx("sl3.json"), "lie").exit_code() == 0);
    CHECK(cmd_check(fx("h3.json"), "lie").exit_code() == 0);
    CHECK(cmd_check(fx("lambda_jordan.json"), "jordan").exit_code() == 0);
    CHECK(cmd_check(fx("semidirect_ternary.json"), "module").exit_code() == 0);
    CHECK(cmd_check(fx("osp12_ternary.json"), "ternary").exit_code() == 0);
    CHECK(cmd_check(fx("heisenberg_ternary.json"), "ternary").exit_code() == 0);

    CliReport bad = cmd_check(fx("broken_jordan.json"), "jordan");
    CHECK(bad.exit_code() == 1);
    CHECK(bad.status == "fail");
    // the fault is in the 4-linear identity, with the tuple listed, and both
    // jordan checkers agree
    CHECK(bad.checks.find("jordan.supercommutative")->passed());
    CHECK_FALSE(bad.checks.find("jordan.identity")->passed());
    CHECK_FALSE(bad.checks.find("jordan.identity")->violations.empty());
    CHECK_FALSE(bad.checks.find("jordan.operator_identity")->passed());

    CHECK(cmd_check(fx("broken_lie.json"), "lie").exit_code() == 1);
    CHECK(cmd_check(fx("no_such.json"), "lie").exit_code() == 2);
    CHECK(cmd_check(fx("sl3.json"), "nonsense").exit_code() == 2);
    // wrong JSON types surface as document errors, not crashes
    CHECK_THROWS_AS(AlgebraDocument::parse(json{{"basis", json::array({{{"label", 3}}})}}),
                    error);
}

TEST_CASE("cmd_build targets") {
    {
        CliReport r = cmd_build(fx("heisenberg_ternary.json"), "tag");
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["total"] == 3);
        REQUIRE(r.artifact.has_value());
        // the emitted table contains [e1⊗m0, e2⊗m0] = {m0⊗m0}
        AlgebraDocument doc = AlgebraDocument::parse(*r.artifact);
        AlgebraTable g = doc.algebra("bracket");
        auto u = g.space.index_of("e1⊗m0"), v = g.space.index_of("e2⊗m0"),
             z = g.space.index_of("{m0⊗m0}");
        REQUIRE((u && v && z));
        CHECK(g.mul(*u, *v) == unit_vec(3, *z));
    }
    {
        CliReport r = cmd_build(fx("heisenberg_ternary.json"), "tkk");
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["total"] == 2);
    }
    {
        CliReport r = cmd_build(fx("osp12_ternary.json"), "bs");
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["Bs"] == 0);
    }
    {
        CliReport r = cmd_build(fx("sl3_ternary.json"), "innder");
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["InnDer"] == 1);
        // the generator matrix is the normalized diag(0,-3/2,3/2) direction
        json ops = (*r.artifact)["operators"];
        REQUIRE(ops.size() == 1);
        json m = ops[0]["matrix"];
        CHECK(m[0][0] == "0");
        CHECK(m[1][1] == "1");
        CHECK(m[2][2] == "-1");
    }
    {
        CliReport r = cmd_build(fx("broken_sl3_ternary.json"), "tag");
        CHECK(r.exit_code() == 1);
        CHECK(r.status == "fail");
        CHECK_FALSE(r.checks.find("ternary.sjt4")->passed());
        CHECK_FALSE(r.artifact.has_value());  // no construction on failing input
    }
}

TEST_CASE("cmd_build writes the artifact when asked") {
    std::string out = std::string(SUPERLIE_FIXTURE_DIR "/../build/tag_out_test.json");
    CliReport r = cmd_build(fx("osp12_ternary.json"), "tag", out);
    REQUIRE(r.exit_code() == 0);
    AlgebraDocument doc = load_document(out);
    CHECK(doc.labels.size() == 5);
    CHECK(check_super_jacobi(doc.algebra("bracket")).passed());
}

TEST_CASE("cmd_decompose") {
    {
        CliReport r = cmd_decompose(fx("sl3.json"), "E12", "E21", "H12");
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["J"] == 1);
        CHECK(r.extra["dims"]["M"] == 2);
        CHECK(r.extra["dims"]["D"] == 1);
        REQUIRE(r.artifact.has_value());
        JTernaryData d = AlgebraDocument::parse(*r.artifact).as_ternary();
        CHECK(d.J.product == jt_sl3().J.product);
        CHECK(d.triple == jt_sl3().triple);
    }
    // same result through the embedded sl2 block
    CHECK(cmd_decompose(fx("sl3.json")).exit_code() == 0);
    CHECK(cmd_decompose(fx("sl2.json")).extra["dims"]["J"] == 1);
    CHECK(cmd_decompose(fx("h3.json")).exit_code() == 0);
    {
        // the assembled osp(1|2) fixture: an odd Lie input end to end
        CliReport r = cmd_decompose(fx("osp12.json"));
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["J"] == 1);
        CHECK(r.extra["dims"]["M"] == 1);
        CHECK(r.extra["dims"]["D"] == 0);
    }
    {
        CliReport r = cmd_decompose(fx("sl2_semidirect.json"));
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["dims"]["J"] == 1);
        CHECK(r.extra["dims"]["M"] == 1);
        CHECK(r.extra["dims"]["D"] == 0);
    }
    {
        CliReport r = cmd_decompose(fx("sl2_plus_V3.json"));
        CHECK(r.exit_code() == 1);
        CHECK(r.status == "fail");
        CHECK(r.message.find("3") != std::string::npos);
    }
    CHECK(cmd_decompose(fx("broken_lie.json")).exit_code() == 1);
}

TEST_CASE("cmd_roundtrip") {
    CHECK(cmd_roundtrip(fx("sl3_ternary.json")).exit_code() == 0);
    CHECK(cmd_roundtrip(fx("osp12_ternary.json")).exit_code() == 0);
    CHECK(cmd_roundtrip(fx("heisenberg_ternary.json")).exit_code() == 0);
    CHECK(cmd_roundtrip(fx("semidirect_ternary.json")).exit_code() == 0);
    {
        CliReport r = cmd_roundtrip(fx("sl3.json"));
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["injective"] == true);
        CHECK(r.extra["surjective"] == true);
    }
    {
        CliReport r = cmd_roundtrip(fx("h3.json"));
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["injective"] == true);
        CHECK(r.extra["surjective"] == true);
    }
    for (const char* f : {"osp12.json", "sl2_semidirect.json"}) {
        CliReport r = cmd_roundtrip(fx(f));
        CHECK(r.exit_code() == 0);
        CHECK(r.extra["surjective"] == true);
    }
    CHECK(cmd_roundtrip(fx("broken_sl3_ternary.json")).exit_code() == 1);
}

TEST_CASE("reports are deterministic") {
    CliReport a = cmd_check(fx("sl3_ternary.json"), "ternary");
    CliReport b = cmd_check(fx("sl3_ternary.json"), "ternary");
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_text(true) == b.to_text(true));
    CliReport c = cmd_build(fx("sl3_ternary.json"), "tag");
    CliReport d = cmd_build(fx("sl3_ternary.json"), "tag");
    CHECK(c.to_json().dump() == d.to_json().dump());
}

TEST_CASE("emitted constructions re-pass their producing checks") {
    for (const char* seed : {"sl3_ternary.json", "osp12_ternary.json",
                             "heisenberg_ternary.json", "semidirect_ternary.json"}) {
        CliReport r = cmd_build(fx(seed), "tag");
        REQUIRE(r.exit_code() == 0);
        AlgebraDocument doc = AlgebraDocument::parse(*r.artifact);
        AlgebraTable g = doc.algebra("bracket");
        CHECK(check_super_anticommutative(g).passed());
        CHECK(check_super_jacobi(g).passed());
    }
}
