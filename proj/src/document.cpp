#include "superlie/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace superlie {

using nlohmann::json;

namespace {

[[noreturn]] void doc_fail(const std::string& path, const std::string& msg) {
    throw error(path + ": " + msg);
}

Rat coeff_at(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    doc_fail(path, "coefficient must be an integer or a \"p/q\" string");
}

std::vector<ResultTerm> result_at(const json& j, const std::string& path) {
    if (!j.is_array()) doc_fail(path, "result must be an array");
    std::vector<ResultTerm> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& t = j[i];
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!t.is_object() || !t.contains("basis") || !t.contains("coeff"))
            doc_fail(p, "expected {basis, coeff}");
        out.push_back({t["basis"].get<std::string>(), coeff_at(t["coeff"], p + ".coeff")});
    }
    return out;
}

Matrix matrix_at(const json& j, const std::string& path) {
    if (!j.is_array()) doc_fail(path, "matrix must be an array of rows");
    Matrix m;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) doc_fail(path, "matrix rows must be arrays");
        Vec row;
        for (std::size_t c = 0; c < j[r].size(); ++c)
            row.push_back(coeff_at(j[r][c], path + "[" + std::to_string(r) + "][" +
                                                 std::to_string(c) + "]"));
        m.append_row(row);
    }
    return m;
}

json result_json(const SuperSpace& space, const Vec& v) {
    json out = json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) out.push_back({{"basis", space.label(k)}, {"coeff", rat_str(v[k])}});
    return out;
}

json table_json(const SuperSpace& l, const SuperSpace& r, const SuperSpace& out,
                const BilinearTable& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.nl; ++i)
        for (std::size_t j = 0; j < t.nr; ++j) {
            Vec v = t.of(i, j);
            if (is_zero_vec(v)) continue;
            entries.push_back(
                {{"left", l.label(i)}, {"right", r.label(j)}, {"result", result_json(out, v)}});
        }
    return entries;
}

}  // namespace

AlgebraDocument AlgebraDocument::parse(const json& j) {
    try {
        return parse_checked(j);
    } catch (const json::exception& e) {
        throw error(std::string("document: ") + e.what());
    }
}

AlgebraDocument AlgebraDocument::parse_checked(const json& j) {
    AlgebraDocument doc;
    if (!j.is_object()) doc_fail("$", "document must be a JSON object");
    if (j.contains("schema")) {
        if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
            doc_fail("schema", "unsupported schema version");
    }
    doc.name = j.value("name", "");
    if (!j.contains("basis") || !j["basis"].is_array()) doc_fail("basis", "missing basis array");
    for (std::size_t i = 0; i < j["basis"].size(); ++i) {
        const json& b = j["basis"][i];
        std::string p = "basis[" + std::to_string(i) + "]";
        if (!b.is_object() || !b.contains("label")) doc_fail(p, "expected {label, parity}");
        doc.labels.push_back(b["label"].get<std::string>());
        int par = b.value("parity", 0);
        if (par != 0 && par != 1) doc_fail(p + ".parity", "parity must be 0 or 1");
        doc.parities.push_back(par);
        std::string sp = b.value("space", "J");
        if (sp != "J" && sp != "M") doc_fail(p + ".space", "space must be \"J\" or \"M\"");
        doc.spaces.push_back(sp[0]);
    }
    if (j.contains("products")) {
        if (!j["products"].is_object()) doc_fail("products", "must be an object of named tables");
        for (auto& [tname, tbl] : j["products"].items()) {
            if (!tbl.is_array()) doc_fail("products." + tname, "table must be an array");
            std::vector<ProductEntry> entries;
            for (std::size_t i = 0; i < tbl.size(); ++i) {
                const json& e = tbl[i];
                std::string p = "products." + tname + "[" + std::to_string(i) + "]";
                if (!e.is_object() || !e.contains("left") || !e.contains("right") ||
                    !e.contains("result"))
                    doc_fail(p, "expected {left, right, result}");
                entries.push_back({e["left"].get<std::string>(), e["right"].get<std::string>(),
                                   result_at(e["result"], p + ".result")});
            }
            doc.products[tname] = std::move(entries);
        }
    }
    if (j.contains("ternary")) {
        if (!j["ternary"].is_array()) doc_fail("ternary", "must be an array");
        for (std::size_t i = 0; i < j["ternary"].size(); ++i) {
            const json& e = j["ternary"][i];
            std::string p = "ternary[" + std::to_string(i) + "]";
            if (!e.is_object() || !e.contains("m1") || !e.contains("m2") || !e.contains("m3") ||
                !e.contains("result"))
                doc_fail(p, "expected {m1, m2, m3, result}");
            doc.ternary.push_back({e["m1"].get<std::string>(), e["m2"].get<std::string>(),
                                   e["m3"].get<std::string>(), result_at(e["result"], p + ".result")});
        }
    }
    if (j.contains("sl2")) {
        const json& s = j["sl2"];
        if (!s.is_object()) doc_fail("sl2", "must be an object {e, f, h}");
        Sl2Spec spec;
        auto read = [&](const char* key, std::optional<std::string>& nm, std::optional<Matrix>& mat) {
            if (!s.contains(key)) doc_fail(std::string("sl2.") + key, "missing");
            if (s[key].is_string())
                nm = s[key].get<std::string>();
            else
                mat = matrix_at(s[key], std::string("sl2.") + key);
        };
        read("e", spec.e_name, spec.e_mat);
        read("f", spec.f_name, spec.f_mat);
        read("h", spec.h_name, spec.h_mat);
        doc.sl2 = std::move(spec);
    }
    return doc;
}

json AlgebraDocument::to_json() const {
    json j;
    j["schema"] = 1;
    if (!name.empty()) j["name"] = name;
    json basis = json::array();
    bool tagged = false;
    for (char c : spaces) tagged |= (c == 'M');
    for (std::size_t i = 0; i < labels.size(); ++i) {
        json b{{"label", labels[i]}, {"parity", parities[i]}};
        if (tagged) b["space"] = std::string(1, spaces[i]);
        basis.push_back(b);
    }
    j["basis"] = basis;
    if (!products.empty()) {
        json p = json::object();
        for (const auto& [tname, entries] : products) {
            json arr = json::array();
            for (const auto& e : entries) {
                json terms = json::array();
                for (const auto& t : e.result)
                    terms.push_back({{"basis", t.basis}, {"coeff", rat_str(t.coeff)}});
                arr.push_back({{"left", e.left}, {"right", e.right}, {"result", terms}});
            }
            p[tname] = arr;
        }
        j["products"] = p;
    }
    if (!ternary.empty()) {
        json arr = json::array();
        for (const auto& e : ternary) {
            json terms = json::array();
            for (const auto& t : e.result)
                terms.push_back({{"basis", t.basis}, {"coeff", rat_str(t.coeff)}});
            arr.push_back({{"m1", e.m1}, {"m2", e.m2}, {"m3", e.m3}, {"result", terms}});
        }
        j["ternary"] = arr;
    }
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

SuperSpace AlgebraDocument::full_space() const { return SuperSpace(labels, parities); }

bool AlgebraDocument::has_product(const std::string& name) const {
    auto it = products.find(name);
    return it != products.end() && !it->second.empty();
}

AlgebraTable AlgebraDocument::algebra(const std::string& product_name) const {
    SuperSpace s = full_space();
    std::size_t n = s.dim();
    BilinearTable t(n, n, n);
    auto it = products.find(product_name);
    if (it != products.end()) {
        for (const auto& e : it->second) {
            auto li = s.index_of(e.left), ri = s.index_of(e.right);
            if (!li) doc_fail("products." + product_name, "unknown label '" + e.left + "'");
            if (!ri) doc_fail("products." + product_name, "unknown label '" + e.right + "'");
            Vec v(n);
            for (const auto& term : e.result) {
                auto bi = s.index_of(term.basis);
                if (!bi) doc_fail("products." + product_name, "unknown label '" + term.basis + "'");
                v[*bi] += term.coeff;
            }
            t.set(*li, *ri, vec_add(t.of(*li, *ri), v));
        }
    }
    return AlgebraTable(std::move(s), std::move(t));
}

JTernaryData AlgebraDocument::as_ternary() const {
    std::vector<std::string> jl, ml;
    std::vector<int> jp, mp;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (spaces[i] == 'J') {
            jl.push_back(labels[i]);
            jp.push_back(parities[i]);
        } else {
            ml.push_back(labels[i]);
            mp.push_back(parities[i]);
        }
    }
    SuperSpace J(jl, jp), M(ml, mp);
    std::size_t nj = J.dim(), nm = M.dim();

    auto fill = [&](const char* tname, const SuperSpace& l, const SuperSpace& r,
                    const SuperSpace& out, BilinearTable& t) {
        auto it = products.find(tname);
        if (it == products.end()) return;
        for (const auto& e : it->second) {
            auto li = l.index_of(e.left), ri = r.index_of(e.right);
            if (!li)
                doc_fail(std::string("products.") + tname,
                         "'" + e.left + "' is not in the expected space");
            if (!ri)
                doc_fail(std::string("products.") + tname,
                         "'" + e.right + "' is not in the expected space");
            Vec v = t.of(*li, *ri);
            for (const auto& term : e.result) {
                auto bi = out.index_of(term.basis);
                if (!bi)
                    doc_fail(std::string("products.") + tname,
                             "result label '" + term.basis + "' is not in the target space");
                v[*bi] += term.coeff;
            }
            t.set(*li, *ri, v);
        }
    };
    BilinearTable dot(nj, nj, nj), bullet(nj, nm, nm), star(nm, nm, nj);
    TrilinearTable triple(nm, nm);
    fill("dot", J, J, J, dot);
    fill("bullet", J, M, M, bullet);
    fill("star", M, M, J, star);
    for (const auto& e : ternary) {
        auto i1 = M.index_of(e.m1), i2 = M.index_of(e.m2), i3 = M.index_of(e.m3);
        if (!i1 || !i2 || !i3) doc_fail("ternary", "triple entries must use M labels");
        Vec v = triple.of(*i1, *i2, *i3);
        for (const auto& term : e.result) {
            auto bi = M.index_of(term.basis);
            if (!bi) doc_fail("ternary", "result label '" + term.basis + "' is not in M");
            v[*bi] += term.coeff;
        }
        triple.set(*i1, *i2, *i3, v);
    }
    for (const auto& [tname, entries] : products)
        if (tname != "dot" && tname != "bullet" && tname != "star" && !entries.empty())
            doc_fail("products." + tname, "unknown table for a ternary document");
    return JTernaryData(AlgebraTable(J, std::move(dot)), M, std::move(bullet), std::move(star),
                        std::move(triple));
}

Sl2Data AlgebraDocument::sl2_data(const AlgebraTable& g, const std::optional<std::string>& e,
                                  const std::optional<std::string>& f,
                                  const std::optional<std::string>& h) const {
    auto by_name = [&](const std::string& nm) {
        auto i = g.space.index_of(nm);
        if (!i) doc_fail("sl2", "unknown basis element '" + nm + "'");
        return *i;
    };
    if (e || f || h) {
        if (!(e && f && h)) doc_fail("sl2", "--e, --f and --h must be given together");
        return sl2_from_elements(g, by_name(*e), by_name(*f), by_name(*h));
    }
    if (!sl2) doc_fail("sl2", "no sl2 block in the document and no --e/--f/--h given");
    const Sl2Spec& s = *sl2;
    if (s.e_name && s.f_name && s.h_name)
        return sl2_from_elements(g, by_name(*s.e_name), by_name(*s.f_name), by_name(*s.h_name));
    if (s.e_mat && s.f_mat && s.h_mat) {
        auto lift = [&](const Matrix& m, const char* which) {
            if (m.rows != g.dim() || m.cols != g.dim())
                doc_fail(std::string("sl2.") + which, "matrix must be square of the basis size");
            return GradedMap(g.space, g.space, 0, m);
        };
        return Sl2Data(lift(*s.e_mat, "e"), lift(*s.f_mat, "f"), lift(*s.h_mat, "h"));
    }
    doc_fail("sl2", "e, f, h must be all names or all matrices");
}

AlgebraDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
        return AlgebraDocument::parse(j);
    } catch (const json::exception& e) {
        throw error(path + ": " + e.what());
    }
}

AlgebraDocument document_from_ternary(const JTernaryData& d, const std::string& name) {
    AlgebraDocument doc;
    doc.name = name;
    for (std::size_t i = 0; i < d.dim_j(); ++i) {
        doc.labels.push_back(d.J.space.label(i));
        doc.parities.push_back(d.J.space.parity(i));
        doc.spaces.push_back('J');
    }
    for (std::size_t i = 0; i < d.dim_m(); ++i) {
        doc.labels.push_back(d.M.label(i));
        doc.parities.push_back(d.M.parity(i));
        doc.spaces.push_back('M');
    }
    auto entries = [&](const SuperSpace& l, const SuperSpace& r, const SuperSpace& out,
                       const BilinearTable& t) {
        std::vector<ProductEntry> es;
        for (std::size_t i = 0; i < t.nl; ++i)
            for (std::size_t j = 0; j < t.nr; ++j) {
                Vec v = t.of(i, j);
                if (is_zero_vec(v)) continue;
                ProductEntry e{l.label(i), r.label(j), {}};
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (v[k] != 0) e.result.push_back({out.label(k), v[k]});
                es.push_back(std::move(e));
            }
        return es;
    };
    if (auto es = entries(d.J.space, d.J.space, d.J.space, d.J.product); !es.empty())
        doc.products["dot"] = std::move(es);
    if (auto es = entries(d.J.space, d.M, d.M, d.bullet); !es.empty())
        doc.products["bullet"] = std::move(es);
    if (auto es = entries(d.M, d.M, d.J.space, d.star); !es.empty())
        doc.products["star"] = std::move(es);
    for (std::size_t i = 0; i < d.dim_m(); ++i)
        for (std::size_t j = 0; j < d.dim_m(); ++j)
            for (std::size_t k = 0; k < d.dim_m(); ++k) {
                Vec v = d.triple.of(i, j, k);
                if (is_zero_vec(v)) continue;
                TripleEntry e{d.M.label(i), d.M.label(j), d.M.label(k), {}};
                for (std::size_t l = 0; l < v.size(); ++l)
                    if (v[l] != 0) e.result.push_back({d.M.label(l), v[l]});
                doc.ternary.push_back(std::move(e));
            }
    return doc;
}

AlgebraDocument document_from_assembled(const AssembledLie& alg, const std::string& name) {
    AlgebraDocument doc;
    doc.name = name;
    const SuperSpace& s = alg.table.space;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        doc.labels.push_back(s.label(i));
        doc.parities.push_back(s.parity(i));
        doc.spaces.push_back('J');
    }
    std::vector<ProductEntry> es;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vec v = alg.table.mul(i, j);
            if (is_zero_vec(v)) continue;
            ProductEntry e{s.label(i), s.label(j), {}};
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0) e.result.push_back({s.label(k), v[k]});
            es.push_back(std::move(e));
        }
    if (!es.empty()) doc.products["bracket"] = std::move(es);
    json blocks;
    json bj = json::array(), bm = json::array(), bd = json::array();
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t i = 0; i < alg.layout.dim_j; ++i)
            bj.push_back(s.label(alg.layout.sl2_index(x, i)));
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t j = 0; j < alg.layout.dim_m; ++j)
            bm.push_back(s.label(alg.layout.v_index(v, j)));
    for (std::size_t k = 0; k < alg.layout.dim_d; ++k)
        bd.push_back(s.label(alg.layout.d_index(k)));
    blocks["sl2xJ"] = bj;
    blocks["VxM"] = bm;
    blocks["D"] = bd;
    doc.extra["blocks"] = blocks;
    return doc;
}

namespace {

AlgebraDocument document_from_operator_algebra(const SuperSpace& space,
                                               const BilinearTable& bracket,
                                               const std::vector<GradedMap>& ops,
                                               const SuperSpace& jm, const std::string& name) {
    AlgebraDocument doc;
    doc.name = name;
    for (std::size_t i = 0; i < space.dim(); ++i) {
        doc.labels.push_back(space.label(i));
        doc.parities.push_back(space.parity(i));
        doc.spaces.push_back('J');
    }
    std::vector<ProductEntry> es;
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = 0; j < space.dim(); ++j) {
            Vec v = bracket.of(i, j);
            if (is_zero_vec(v)) continue;
            ProductEntry e{space.label(i), space.label(j), {}};
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0) e.result.push_back({space.label(k), v[k]});
            es.push_back(std::move(e));
        }
    if (!es.empty()) doc.products["bracket"] = std::move(es);
    json jops = json::array();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        json rows = json::array();
        for (std::size_t i = 0; i < ops[k].mat.rows; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < ops[k].mat.cols; ++j)
                row.push_back(rat_str(ops[k].mat(i, j)));
            rows.push_back(row);
        }
        jops.push_back({{"label", space.label(k)}, {"matrix", rows}});
    }
    doc.extra["operators"] = jops;
    json jmb = json::array();
    for (std::size_t i = 0; i < jm.dim(); ++i) jmb.push_back(jm.label(i));
    doc.extra["jm_basis"] = jmb;
    return doc;
}

}  // namespace

AlgebraDocument document_from_bs(const BsAlgebra& bs, const std::string& name) {
    return document_from_operator_algebra(bs.space, bs.bracket, bs.class_ops, bs.innder.jm, name);
}

AlgebraDocument document_from_innder(const InnDerAlgebra& inn, const std::string& name) {
    AlgebraDocument doc = document_from_operator_algebra(inn.d_space, inn.bracket, inn.ops,
                                                         inn.jm, name);
    // every generator expressed in the span basis
    std::size_t nj = inn.angle_coords.nl;
    json gens = json::array();
    for (const auto& g : inn.generators) {
        bool angle = g.kind == InnerOperator::Kind::angle;
        Vec coords = angle ? inn.angle_coords.of(g.i, g.j) : inn.partial_coords.of(g.i, g.j);
        gens.push_back({{"kind", angle ? "angle" : "partial"},
                        {"left", inn.jm.label(angle ? g.i : nj + g.i)},
                        {"right", inn.jm.label(angle ? g.j : nj + g.j)},
                        {"coords", result_json(inn.d_space, coords)}});
    }
    doc.extra["generators"] = gens;
    return doc;
}

json CliReport::to_json() const {
    json j;
    j["command"] = command;
    j["status"] = status;
    if (!message.empty()) j["message"] = message;
    json cs = json::array();
    for (const auto& c : checks.checks) {
        json v = json::array();
        for (const auto& viol : c.violations)
            v.push_back({{"at", viol.where}, {"residual", viol.residual}});
        cs.push_back({{"id", c.id},
                      {"law", c.law},
                      {"tuples", c.tuples},
                      {"violations", v}});
    }
    j["checks"] = cs;
    for (auto& [k, v] : extra.items()) j[k] = v;
    if (artifact) j["artifact"] = *artifact;
    return j;
}

std::string CliReport::to_text(bool verbose) const {
    std::ostringstream os;
    os << command << ": " << status << "\n";
    if (!message.empty()) os << "  " << message << "\n";
    for (auto& [k, v] : extra.items()) os << "  " << k << ": " << v.dump() << "\n";
    for (const auto& c : checks.checks) {
        os << "  " << (c.passed() ? "PASS" : "FAIL") << " " << c.id << " (" << c.tuples
           << " tuples";
        if (!c.passed()) os << ", " << c.violations.size() << " violations";
        os << ")\n";
        if (verbose && !c.law.empty()) os << "       " << c.law << "\n";
        std::size_t show = verbose ? c.violations.size() : std::min<std::size_t>(c.violations.size(), 3);
        for (std::size_t i = 0; i < show; ++i) {
            os << "       at (";
            for (std::size_t k = 0; k < c.violations[i].where.size(); ++k)
                os << (k ? ", " : "") << c.violations[i].where[k];
            os << "): " << c.violations[i].residual << "\n";
        }
        if (show < c.violations.size())
            os << "       ... " << (c.violations.size() - show) << " more\n";
    }
    return os.str();
}

namespace {

CliReport errored(const std::string& command, const std::string& msg) {
    CliReport r;
    r.command = command;
    r.status = "error";
    r.message = msg;
    return r;
}

}  // namespace

CliReport cmd_check(const std::string& path, const std::string& kind) {
    CliReport out;
    out.command = "check " + path + " --kind " + kind;
    try {
        AlgebraDocument doc = load_document(path);
        if (kind == "lie") {
            AlgebraTable g = doc.algebra("bracket");
            out.checks.add(check_super_anticommutative(g));
            out.checks.add(check_super_jacobi(g));
        } else if (kind == "jordan") {
            AlgebraTable j = doc.algebra("dot");
            out.checks = check_super_jordan(j);
            Report via = check_super_jordan_via_brackets(j);
            for (auto& c : via.checks)
                if (c.id != "jordan.supercommutative") out.checks.add(std::move(c));
        } else if (kind == "module") {
            JTernaryData d = doc.as_ternary();
            out.checks = check_super_jordan(d.J);
            out.checks.add(check_special_supermodule(d.J, d.M, d.bullet));
        } else if (kind == "ternary") {
            JTernaryData d = doc.as_ternary();
            out.checks = check_jternary_full(d);
        } else {
            return errored(out.command, "unknown kind '" + kind + "'");
        }
    } catch (const error& e) {
        return errored(out.command, e.what());
    }
    out.settle();
    return out;
}

CliReport cmd_build(const std::string& path, const std::string& target,
                    const std::string& out_path) {
    CliReport out;
    out.command = "build " + path + " --target " + target;
    try {
        AlgebraDocument doc = load_document(path);
        JTernaryData d = doc.as_ternary();
        std::string name = (doc.name.empty() ? "algebra" : doc.name) + "." + target;
        if (target == "tkk" || target == "tag") {
            AssembledLie alg = target == "tkk" ? tkk(d) : tag(d);
            out.extra["dims"] = {{"J", alg.layout.dim_j},
                                 {"M", alg.layout.dim_m},
                                 {"D", alg.layout.dim_d},
                                 {"total", alg.layout.dim()}};
            if (alg.bs) out.checks.merge(alg.bs->checks);
            out.artifact = document_from_assembled(alg, name).to_json();
        } else if (target == "bs") {
            Report pre = check_jternary_full(d);
            if (!pre.passed()) throw construction_error("bs refused: J-ternary axioms fail", pre);
            BsAlgebra bs = bs_quotient(d);
            out.extra["dims"] = {{"Bs", bs.space.dim()}, {"InnDer", bs.innder.dim()}};
            out.checks.merge(bs.checks);
            out.artifact = document_from_bs(bs, name).to_json();
        } else if (target == "innder") {
            Report pre = check_jternary_full(d);
            if (!pre.passed()) throw construction_error("innder refused: J-ternary axioms fail", pre);
            InnDerAlgebra inn = innder_basis(d);
            out.extra["dims"] = {{"InnDer", inn.dim()}};
            out.artifact = document_from_innder(inn, name).to_json();
        } else {
            return errored(out.command, "unknown target '" + target + "'");
        }
        if (!out_path.empty() && out.artifact) {
            std::ofstream of(out_path);
            if (!of) return errored(out.command, "cannot write '" + out_path + "'");
            of << out.artifact->dump(2) << "\n";
        }
    } catch (const construction_error& e) {
        out.status = "fail";
        out.message = e.what();
        out.checks = e.failed;
        return out;
    } catch (const error& e) {
        return errored(out.command, e.what());
    }
    out.settle();
    return out;
}

CliReport cmd_decompose(const std::string& path, const std::optional<std::string>& e,
                        const std::optional<std::string>& f, const std::optional<std::string>& h) {
    CliReport out;
    out.command = "decompose " + path;
    try {
        AlgebraDocument doc = load_document(path);
        AlgebraTable g = doc.algebra("bracket");
        Sl2Data sl2 = doc.sl2_data(g, e, f, h);
        ShortDecomposition dec = decompose(g, sl2);
        ExtractedOps ops = extract_ternary(dec);
        out.extra["dims"] = {{"J", dec.dim_j()}, {"M", dec.dim_m()}, {"D", dec.dim_d()}};
        out.checks = verify_short_structure(dec, ops);
        out.artifact =
            document_from_ternary(ops.data, (doc.name.empty() ? "algebra" : doc.name) + ".ternary")
                .to_json();
    } catch (const not_short_error& e2) {
        out.status = "fail";
        out.message = e2.what();
        return out;
    } catch (const not_sl2_error& e2) {
        out.status = "fail";
        out.message = e2.what();
        return out;
    } catch (const error& e2) {
        return errored(out.command, e2.what());
    }
    out.settle();
    return out;
}

CliReport cmd_roundtrip(const std::string& path) {
    CliReport out;
    out.command = "roundtrip " + path;
    try {
        AlgebraDocument doc = load_document(path);
        if (doc.has_product("bracket")) {
            AlgebraTable g = doc.algebra("bracket");
            Sl2Data sl2 = doc.sl2_data(g, {}, {}, {});
            PhiResult phi = phi_map(g, sl2);
            out.checks = phi.checks;
            out.extra["rank"] = phi.rank;
            out.extra["injective"] = phi.injective;
            out.extra["surjective"] = phi.surjective;
            out.extra["dims"] = {{"tag", phi.tag_alg.layout.dim()}, {"g", g.dim()}};
        } else {
            JTernaryData d = doc.as_ternary();
            out.checks = roundtrip_check(d);
        }
    } catch (const construction_error& e) {
        out.status = "fail";
        out.message = e.what();
        out.checks = e.failed;
        return out;
    } catch (const not_short_error& e) {
        out.status = "fail";
        out.message = e.what();
        return out;
    } catch (const not_sl2_error& e) {
        out.status = "fail";
        out.message = e.what();
        return out;
    } catch (const error& e) {
        return errored(out.command, e.what());
    }
    out.settle();
    return out;
}

}  // namespace superlie
