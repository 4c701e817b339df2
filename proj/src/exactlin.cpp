#include "superlie/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace superlie {

Rat parse_rat(std::string_view s) {
    auto bad = [&] { throw error("malformed rational literal: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto check_int = [&](std::string_view t) {
        if (t.empty()) bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rat(Int(std::string(s)));
    }
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int q{std::string(den)};
    if (q == 0) bad();
    return Rat(Int(std::string(num)), q);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec& add_scaled(Vec& dst, const Rat& c, const Vec& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return dst;
}

Vec scaled(const Vec& v, const Rat& c) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    return add_scaled(r, 1, b);
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    return add_scaled(r, -1, b);
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols != rhs.rows) throw error("matrix product: dimension mismatch");
    Matrix r(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) r(i, j) += x * rhs(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw error("matrix sum: dimension mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += rhs.a[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw error("matrix difference: dimension mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= rhs.a[i];
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r(*this);
    for (auto& x : r.a) x *= c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols) throw error("matrix apply: dimension mismatch");
    Vec r(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * x[j];
    return r;
}

Vec Matrix::row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

void Matrix::set_row(std::size_t i, const Vec& v) {
    std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

void Matrix::append_row(const Vec& v) {
    if (rows == 0 && cols == 0) cols = v.size();
    if (v.size() != cols) throw error("append_row: width mismatch");
    a.insert(a.end(), v.begin(), v.end());
    ++rows;
}

Matrix Matrix::from_flat(std::size_t r, std::size_t c, const Vec& flat) {
    if (flat.size() != r * c) throw error("from_flat: size mismatch");
    Matrix m(r, c);
    m.a = flat;
    return m;
}

Rref rref(const Matrix& m) {
    Matrix w(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
        std::size_t p = r;
        while (p < w.rows && w(p, c) == 0) ++p;
        if (p == w.rows) continue;
        // swap pivot row up
        if (p != r)
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w(p, j), w(r, j));
        Rat inv = Rat(1) / w(r, c);
        for (std::size_t j = c; j < w.cols; ++j) w(r, j) *= inv;
        for (std::size_t i = 0; i < w.rows; ++i) {
            if (i == r || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (std::size_t j = c; j < w.cols; ++j) w(i, j) -= f * w(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(r, w.cols);
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, w.row(i));
    return {out, pivots};
}

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots.push_back(i);
    return s;
}

Subspace Subspace::from_rows(std::size_t ambient, const Matrix& rows) {
    if (rows.rows != 0 && rows.cols != ambient) throw error("from_rows: ambient mismatch");
    Rref r = rref(rows.rows == 0 ? Matrix(0, ambient) : rows);
    Subspace s;
    s.ambient = ambient;
    s.basis = r.mat;
    s.pivots = r.pivots;
    return s;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient) throw error("coordinates: ambient mismatch");
    Vec coeff(dim());
    Vec rem(v);
    for (std::size_t i = 0; i < dim(); ++i) {
        coeff[i] = rem[pivots[i]];
        if (coeff[i] != 0) add_scaled(rem, -coeff[i], basis.row(i));
    }
    if (!is_zero_vec(rem)) return std::nullopt;
    return coeff;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient != other.ambient) throw error("intersect: ambient mismatch");
    // Zassenhaus: rref of [A|A ; B|0]; rows with zero left half carry the
    // intersection in the right half.
    std::size_t n = ambient;
    Matrix block(dim() + other.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block(i, j) = basis(i, j);
            block(i, n + j) = basis(i, j);
        }
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block(dim() + i, j) = other.basis(i, j);
    Rref r = rref(block);
    Matrix rows(0, n);
    for (std::size_t i = 0; i < r.mat.rows; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = r.mat(i, j) == 0;
        if (left_zero) {
            Vec right(n);
            for (std::size_t j = 0; j < n; ++j) right[j] = r.mat(i, n + j);
            rows.append_row(right);
        }
    }
    return from_rows(n, rows);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient != other.ambient) throw error("sum: ambient mismatch");
    Matrix rows(0, ambient);
    for (std::size_t i = 0; i < dim(); ++i) rows.append_row(basis.row(i));
    for (std::size_t i = 0; i < other.dim(); ++i) rows.append_row(other.basis.row(i));
    return from_rows(ambient, rows);
}

Subspace kernel(const Matrix& m) {
    Rref r = rref(m);
    std::size_t n = m.cols;
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix rows(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat(i, f);
        rows.append_row(v);
    }
    return Subspace::from_rows(n, rows);
}

Subspace eigenspace(const Matrix& m, const Rat& lambda) {
    if (m.rows != m.cols) throw error("eigenspace: matrix must be square");
    Matrix shifted(m);
    for (std::size_t i = 0; i < m.rows; ++i) shifted(i, i) -= lambda;
    return kernel(shifted);
}

Quotient quotient_complement(const Subspace& relations) {
    std::size_t n = relations.ambient;
    std::vector<bool> is_pivot(n, false);
    for (auto p : relations.pivots) is_pivot[p] = true;
    Quotient q;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) q.representatives.push_back(j);
    q.projection = Matrix(q.representatives.size(), n);
    for (std::size_t k = 0; k < q.representatives.size(); ++k) {
        std::size_t f = q.representatives[k];
        q.projection(k, f) = 1;
        // pivot row i says e_{p_i} = -sum over free columns of basis(i, .)
        for (std::size_t i = 0; i < relations.pivots.size(); ++i)
            q.projection(k, relations.pivots[i]) = -relations.basis(i, f);
    }
    return q;
}

}  // namespace superlie
