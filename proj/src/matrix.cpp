#include "skewcodes/matrix.hpp"

namespace skewcodes {

namespace {

// In-place Gauss-Jordan on rows; returns the rank.
std::size_t reduce_rows(const Field& f, std::vector<std::vector<Code>>& m, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const Code iv = f.inv(m[r][c]);
        for (auto& v : m[r]) v = f.mul(v, iv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Code k = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[r][j]));
        }
        ++r;
    }
    return r;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
    if (v.field_ptr() != field_) throw ValidationError("field mismatch");
    data_[i * cols_ + j] = v.code();
}

Matrix Matrix::top_rows(std::size_t k) const {
    Matrix out(*field_, k, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(k * cols_), out.data_.begin());
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
    return out;
}

std::vector<FieldElement> Matrix::row(std::size_t i) const {
    std::vector<FieldElement> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::size_t rank(const Matrix& a) {
    std::vector<std::vector<Code>> m(a.rows(), std::vector<Code>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.code(i, j);
    return reduce_rows(a.field(), m, a.cols());
}

Matrix reduced_column_echelon(const Matrix& a) {
    const Matrix t = a.transpose();
    std::vector<std::vector<Code>> m(t.rows(), std::vector<Code>(t.cols()));
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) m[i][j] = t.code(i, j);
    reduce_rows(a.field(), m, t.cols());
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out.set(j, i, {&a.field(), m[i][j]});
    return out;
}

std::optional<std::vector<FieldElement>> solve(const Matrix& a, const std::vector<FieldElement>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw ValidationError("solve expects a square system");
    const Field& f = a.field();
    std::vector<std::vector<Code>> m(n, std::vector<Code>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.code(i, j);
        if (b[i].field_ptr() != &f) throw ValidationError("field mismatch");
        m[i][n] = b[i].code();
    }
    if (reduce_rows(f, m, n) < n) return std::nullopt;
    std::vector<FieldElement> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(&f, m[i][n]);
    return x;
}

}  // namespace skewcodes
