#pragma once

#include <optional>
#include <vector>

#include "skewcodes/field.hpp"

namespace skewcodes {

/// Dense row-major matrix over a single field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement at(std::size_t i, std::size_t j) const { return {field_, data_[i * cols_ + j]}; }
    void set(std::size_t i, std::size_t j, const FieldElement& v);
    Code code(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// First k rows.
    Matrix top_rows(std::size_t k) const;
    Matrix transpose() const;
    std::vector<FieldElement> row(std::size_t i) const;

    bool operator==(const Matrix& o) const;

  private:
    const Field* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Code> data_;
};

std::size_t rank(const Matrix& a);
/// Reduced column echelon form: the transpose of the reduced row echelon form
/// of the transpose, zero columns kept at the right.
Matrix reduced_column_echelon(const Matrix& a);
/// Unique solution of a x = b for square nonsingular a; nullopt if singular.
std::optional<std::vector<FieldElement>> solve(const Matrix& a, const std::vector<FieldElement>& b);

}  // namespace skewcodes
