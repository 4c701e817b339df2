#include "superlie/superspace.hpp"

#include <set>

namespace superlie {

SuperSpace::SuperSpace(std::vector<std::string> lab, std::vector<int> par)
    : labels(std::move(lab)), parities(std::move(par)) {
    if (labels.size() != parities.size()) throw error("superspace: labels/parities size mismatch");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw error("superspace: duplicate basis label '" + l + "'");
    for (int p : parities)
        if (p != 0 && p != 1) throw error("superspace: parity must be 0 or 1");
}

std::optional<std::size_t> SuperSpace::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return i;
    return std::nullopt;
}

SuperSpace SuperSpace::direct_sum(const SuperSpace& a, const SuperSpace& b) {
    std::vector<std::string> lab(a.labels);
    lab.insert(lab.end(), b.labels.begin(), b.labels.end());
    std::vector<int> par(a.parities);
    par.insert(par.end(), b.parities.begin(), b.parities.end());
    return SuperSpace(std::move(lab), std::move(par));
}

std::optional<int> homogeneous_parity(const SuperSpace& s, const Vec& v) {
    std::optional<int> p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!p)
            p = s.parity(i);
        else if (*p != s.parity(i))
            return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
}

GradedMap::GradedMap(SuperSpace dom, SuperSpace cod, int par, Matrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), parity(par & 1), mat(std::move(m)) {
    if (mat.rows != codomain.dim() || mat.cols != domain.dim())
        throw error("graded map: matrix shape does not match spaces");
    for (std::size_t i = 0; i < mat.rows; ++i)
        for (std::size_t j = 0; j < mat.cols; ++j)
            if (mat(i, j) != 0 && codomain.parity(i) != parity_add(domain.parity(j), parity))
                throw error("graded map: entry (" + codomain.label(i) + ", " + domain.label(j) +
                            ") violates the parity pattern");
}

GradedMap GradedMap::zero(const SuperSpace& dom, const SuperSpace& cod, int par) {
    return GradedMap(dom, cod, par, Matrix(cod.dim(), dom.dim()));
}

GradedMap GradedMap::identity(const SuperSpace& s) {
    return GradedMap(s, s, 0, Matrix::identity(s.dim()));
}

Vec GradedMap::apply_basis(std::size_t j) const {
    Vec r(mat.rows);
    for (std::size_t i = 0; i < mat.rows; ++i) r[i] = mat(i, j);
    return r;
}

GradedMap GradedMap::operator+(const GradedMap& rhs) const {
    if (domain != rhs.domain || codomain != rhs.codomain || parity != rhs.parity)
        throw error("graded map sum: signature mismatch");
    return GradedMap(domain, codomain, parity, mat + rhs.mat);
}

GradedMap GradedMap::operator-(const GradedMap& rhs) const {
    if (domain != rhs.domain || codomain != rhs.codomain || parity != rhs.parity)
        throw error("graded map difference: signature mismatch");
    return GradedMap(domain, codomain, parity, mat - rhs.mat);
}

GradedMap GradedMap::scaled(const Rat& c) const { return GradedMap(domain, codomain, parity, mat.scaled(c)); }

GradedMap compose_graded(const GradedMap& f, const GradedMap& g) {
    if (f.domain != g.codomain) throw error("compose_graded: domain(f) != codomain(g)");
    return GradedMap(g.domain, f.codomain, parity_add(f.parity, g.parity), f.mat * g.mat);
}

GradedMap super_commutator(const GradedMap& f, const GradedMap& g) {
    if (f.domain != f.codomain || g.domain != g.codomain || f.domain != g.domain)
        throw error("super_commutator: not endomorphisms of one space");
    Rat s = koszul_sign(f.parity, g.parity);
    return GradedMap(f.domain, f.domain, parity_add(f.parity, g.parity),
                     f.mat * g.mat - (g.mat * f.mat).scaled(s));
}

SuperSpace TensorSquare::as_superspace() const {
    std::vector<std::string> lab;
    std::vector<int> par;
    for (std::size_t k = 0; k < dim(); ++k) {
        auto [i, j] = unflatten(k);
        lab.push_back("{" + factor.label(i) + "⊗" + factor.label(j) + "}");
        par.push_back(parity(k));
    }
    return SuperSpace(std::move(lab), std::move(par));
}

}  // namespace superlie
