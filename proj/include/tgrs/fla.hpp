#ifndef TGRS_FLA_HPP
#define TGRS_FLA_HPP

#include <cstddef>

#include "tgrs/gf.hpp"

namespace tgrs {

// Dense matrix over a Field, row-major packed storage.
class MatrixGF {
  public:
    MatrixGF() = default;
    MatrixGF(const Field& f, size_t rows, size_t cols);
    static MatrixGF identity(const Field& f, size_t n);

    const Field& field() const;
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    FieldElement at(size_t i, size_t j) const { return FieldElement(f_, data_[i * cols_ + j]); }
    void set(size_t i, size_t j, const FieldElement& e);
    uint32_t packed_at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    void set_packed(size_t i, size_t j, uint32_t v) { data_[i * cols_ + j] = v; }

    MatrixGF transpose() const;
    MatrixGF operator*(const MatrixGF& o) const;
    MatrixGF stack_rows(const MatrixGF& below) const;
    MatrixGF select_cols(const std::vector<size_t>& idx) const;
    MatrixGF row(size_t i) const;
    bool is_zero() const;
    bool operator==(const MatrixGF& o) const;
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

  private:
    const Field* f_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> data_;
};

struct RrefResult {
    MatrixGF r;
    size_t rank;
    std::vector<size_t> pivot_cols;
};

// Reduced row echelon form by Gaussian elimination; first nonzero pivot in scan order.
RrefResult rref(const MatrixGF& m);
size_t rank(const MatrixGF& m);

// Basis of the right null space {x : M x^T = 0}, rows in reduced echelon form.
MatrixGF kernel(const MatrixGF& m);

FieldElement det(const MatrixGF& m);  // DimensionMismatch unless square

}  // namespace tgrs

#endif
