#pragma once

#include <vector>

#include "ccode/galois.hpp"

namespace ccode {

/// Dense matrix over a FieldPtr, row-major, exact arithmetic only.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }
    static Matrix identity(FieldPtr f, int n) {
        Matrix m(std::move(f), n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix from_rows(FieldPtr f, const std::vector<std::vector<int>>& rows);

    const FieldPtr& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::vector<int> row(int r) const {
        return {a_.begin() + static_cast<size_t>(r) * cols_, a_.begin() + static_cast<size_t>(r + 1) * cols_};
    }
    bool is_zero() const {
        for (int v : a_)
            if (v) return false;
        return true;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ &&
               ((!f_ && !o.f_) || (f_ && o.f_ && f_->same_as(*o.f_)));
    }

    void check_entries() const;

private:
    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<int> a_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

RrefResult rref(const Matrix& a);
int rank_of(const Matrix& a);
/// Nonzero rows of the reduced row-echelon form; canonical basis of the row space.
Matrix row_basis(const Matrix& a);
/// Basis of the right null space {v : a v^T = 0}, one vector per row.
Matrix kernel(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix stack_v(const Matrix& a, const Matrix& b);
Matrix stack_h(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix delete_col(const Matrix& a, int col);
/// Appends one column making every row sum to zero.
Matrix append_parity_col(const Matrix& a);
bool same_row_space(const Matrix& a, const Matrix& b);
/// a restricted to rows [r0, r1).
Matrix take_rows(const Matrix& a, int r0, int r1);
int vector_weight(const std::vector<int>& v);

}  // namespace ccode
