#include "tgrs/fla.hpp"

#include <algorithm>

namespace tgrs {

MatrixGF::MatrixGF(const Field& f, size_t rows, size_t cols) : f_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) fail("DimensionMismatch", "matrix dimensions must be positive");
}

MatrixGF MatrixGF::identity(const Field& f, size_t n) {
    MatrixGF m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set_packed(i, i, f.one().packed());
    return m;
}

const Field& MatrixGF::field() const {
    if (!f_) fail("FieldMismatch", "uninitialized matrix");
    return *f_;
}

void MatrixGF::set(size_t i, size_t j, const FieldElement& e) {
    if (&e.field() != f_) fail("FieldMismatch", "matrix entry from another field");
    data_[i * cols_ + j] = e.packed();
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field(), cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
    if (f_ != o.f_) fail("FieldMismatch", "matrix product across fields");
    if (cols_ != o.rows_) fail("DimensionMismatch", "inner dimensions disagree");
    MatrixGF r(*f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t l = 0; l < cols_; ++l) {
            uint32_t a = data_[i * cols_ + l];
            if (!a) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                uint32_t b = o.data_[l * o.cols_ + j];
                if (!b) continue;
                r.data_[i * o.cols_ + j] = f_->add(r.data_[i * o.cols_ + j], f_->mul(a, b));
            }
        }
    }
    return r;
}

MatrixGF MatrixGF::stack_rows(const MatrixGF& below) const {
    if (f_ != below.f_) fail("FieldMismatch", "stacking matrices over different fields");
    if (cols_ != below.cols_) fail("DimensionMismatch", "stacking needs equal column counts");
    MatrixGF r(*f_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + data_.size());
    return r;
}

MatrixGF MatrixGF::select_cols(const std::vector<size_t>& idx) const {
    if (idx.empty()) fail("DimensionMismatch", "empty column selection");
    MatrixGF r(field(), rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) fail("DimensionMismatch", "column index out of range");
            r.data_[i * idx.size() + j] = data_[i * cols_ + idx[j]];
        }
    return r;
}

MatrixGF MatrixGF::row(size_t i) const {
    MatrixGF r(field(), 1, cols_);
    for (size_t j = 0; j < cols_; ++j) r.data_[j] = data_[i * cols_ + j];
    return r;
}

bool MatrixGF::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint32_t v) { return v == 0; });
}

bool MatrixGF::operator==(const MatrixGF& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const MatrixGF& m) {
    const Field& f = m.field();
    MatrixGF r = m;
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t col = 0; col < r.cols() && pr < r.rows(); ++col) {
        size_t sel = pr;
        while (sel < r.rows() && r.packed_at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pr)
            for (size_t j = 0; j < r.cols(); ++j) {
                uint32_t t = r.packed_at(pr, j);
                r.set_packed(pr, j, r.packed_at(sel, j));
                r.set_packed(sel, j, t);
            }
        uint32_t inv = f.inv(r.packed_at(pr, col));
        for (size_t j = col; j < r.cols(); ++j) r.set_packed(pr, j, f.mul(r.packed_at(pr, j), inv));
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == pr) continue;
            uint32_t c = r.packed_at(i, col);
            if (!c) continue;
            for (size_t j = col; j < r.cols(); ++j)
                r.set_packed(i, j, f.sub(r.packed_at(i, j), f.mul(c, r.packed_at(pr, j))));
        }
        pivots.push_back(col);
        ++pr;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

size_t rank(const MatrixGF& m) { return rref(m).rank; }

MatrixGF kernel(const MatrixGF& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    size_t n = m.cols();
    size_t dim = n - rr.rank;
    if (dim == 0) return MatrixGF();  // empty basis
    std::vector<bool> is_pivot(n, false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    MatrixGF basis(f, dim, n);
    size_t row = 0;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set_packed(row, free_col, f.one().packed());
        for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
            basis.set_packed(row, rr.pivot_cols[pi], f.neg(rr.r.packed_at(pi, free_col)));
        ++row;
    }
    return rref(basis).r;  // canonical form
}

FieldElement det(const MatrixGF& m) {
    const Field& f = m.field();
    if (m.rows() != m.cols()) fail("DimensionMismatch", "determinant of a non-square matrix");
    MatrixGF a = m;
    size_t n = a.rows();
    uint32_t d = f.one().packed();
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a.packed_at(sel, col) == 0) ++sel;
        if (sel == n) return f.zero();
        if (sel != col) {
            negate = !negate;
            for (size_t j = 0; j < n; ++j) {
                uint32_t t = a.packed_at(col, j);
                a.set_packed(col, j, a.packed_at(sel, j));
                a.set_packed(sel, j, t);
            }
        }
        uint32_t piv = a.packed_at(col, col);
        d = f.mul(d, piv);
        uint32_t inv = f.inv(piv);
        for (size_t i = col + 1; i < n; ++i) {
            uint32_t c = f.mul(a.packed_at(i, col), inv);
            if (!c) continue;
            for (size_t j = col; j < n; ++j) a.set_packed(i, j, f.sub(a.packed_at(i, j), f.mul(c, a.packed_at(col, j))));
        }
    }
    if (negate) d = f.neg(d);
    return FieldElement(&f, d);
}

}  // namespace tgrs
