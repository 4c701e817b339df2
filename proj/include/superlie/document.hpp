// JSON documents for structure-constant algebras and the command layer behind
// the CLI. Rational coefficients travel as strings "p" or "p/q"; tables are
// taken literally (no automatic symmetrization), unspecified products are zero.
#pragma once

#include "superlie/shortdec.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superlie {

struct ResultTerm {
    std::string basis;
    Rat coeff;
};

struct ProductEntry {
    std::string left, right;
    std::vector<ResultTerm> result;
};

struct TripleEntry {
    std::string m1, m2, m3;
    std::vector<ResultTerm> result;
};

struct Sl2Spec {
    // each generator is either a basis-element name or an explicit matrix
    std::optional<std::string> e_name, f_name, h_name;
    std::optional<Matrix> e_mat, f_mat, h_mat;
};

struct AlgebraDocument {
    int schema = 1;
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> parities;
    std::vector<char> spaces;  // 'J' or 'M' per basis element
    std::map<std::string, std::vector<ProductEntry>> products;
    std::vector<TripleEntry> ternary;
    std::optional<Sl2Spec> sl2;
    nlohmann::json extra;  // block layout / operators on emitted documents

    /// Throws superlie::error on any malformed input, naming the field path.
    static AlgebraDocument parse(const nlohmann::json& j);
    nlohmann::json to_json() const;

    SuperSpace full_space() const;
    bool has_product(const std::string& name) const;
    /// Whole basis with the named product; throws on unknown labels.
    AlgebraTable algebra(const std::string& product_name) const;
    /// Split the basis by space tags and build (J, M, •, *, triple);
    /// missing products are zero.
    JTernaryData as_ternary() const;
    /// sl2 data from CLI-name overrides, else the embedded block;
    /// names become ad operators.
    Sl2Data sl2_data(const AlgebraTable& g, const std::optional<std::string>& e,
                     const std::optional<std::string>& f,
                     const std::optional<std::string>& h) const;

  private:
    static AlgebraDocument parse_checked(const nlohmann::json& j);
};

AlgebraDocument load_document(const std::string& path);

AlgebraDocument document_from_ternary(const JTernaryData& d, const std::string& name);
AlgebraDocument document_from_assembled(const AssembledLie& alg, const std::string& name);
AlgebraDocument document_from_bs(const BsAlgebra& bs, const std::string& name);
AlgebraDocument document_from_innder(const InnDerAlgebra& inn, const std::string& name);

struct CliReport {
    std::string command;
    std::string status = "pass";  // pass | fail | error
    Report checks;
    nlohmann::json extra = nlohmann::json::object();
    std::optional<nlohmann::json> artifact;
    std::string message;  // set on status == error / hard failures

    int exit_code() const { return status == "pass" ? 0 : status == "fail" ? 1 : 2; }
    void settle() {
        if (status != "error" && !checks.passed()) status = "fail";
    }
    nlohmann::json to_json() const;
    std::string to_text(bool verbose) const;
};

CliReport cmd_check(const std::string& path, const std::string& kind);
CliReport cmd_build(const std::string& path, const std::string& target,
                    const std::string& out_path = "");
CliReport cmd_decompose(const std::string& path, const std::optional<std::string>& e = {},
                        const std::optional<std::string>& f = {},
                        const std::optional<std::string>& h = {});
CliReport cmd_roundtrip(const std::string& path);

}  // namespace superlie
