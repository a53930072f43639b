#include "ccode/matrix.hpp"

#include <algorithm>

namespace ccode {

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(std::move(f), r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw Error("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    m.check_entries();
    return m;
}

void Matrix::check_entries() const {
    if (!f_) {
        if (rows_ * cols_ != 0) throw Error("matrix without a field");
        return;
    }
    for (int v : a_) f_->check_element(v);
}

namespace {
void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
        throw Error("field mismatch between matrices");
}
}  // namespace

RrefResult rref(const Matrix& a) {
    const Field& F = *a.field();
    RrefResult res{a, 0, {}};
    Matrix& m = res.reduced;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        int iv = F.inv(m.at(r, c));
        if (iv != 1)
            for (int j = 0; j < m.cols(); ++j) m.at(r, j) = F.mul(iv, m.at(r, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            int f = m.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank_of(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return rref(a).rank;
}

Matrix row_basis(const Matrix& a) {
    RrefResult r = rref(a);
    return take_rows(r.reduced, 0, r.rank);
}

Matrix kernel(const Matrix& a) {
    int n = a.cols();
    if (a.rows() == 0) return Matrix::identity(a.field(), n);
    RrefResult r = rref(a);
    const Field& F = *a.field();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    Matrix out(a.field(), n - r.rank, n);
    int row = 0;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        out.at(row, fc) = 1;
        for (int i = 0; i < r.rank; ++i) out.at(row, r.pivot_cols[i]) = F.neg(r.reduced.at(i, fc));
        ++row;
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw Error("dimension mismatch in matrix product");
    const Field& F = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            int v = a.at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(v, b.at(l, j)));
        }
    return out;
}

Matrix mat_neg(const Matrix& a) {
    const Field& F = *a.field();
    Matrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = F.neg(out.at(i, j));
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    const Field& F = *a.field();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            int v = a.at(i, j);
            if (v == 0) continue;
            for (int bi = 0; bi < b.rows(); ++bi)
                for (int bj = 0; bj < b.cols(); ++bj)
                    out.at(i * b.rows() + bi, j * b.cols() + bj) = F.mul(v, b.at(bi, bj));
        }
    return out;
}

Matrix stack_v(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw Error("column mismatch in vertical stack");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

Matrix stack_h(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw Error("row mismatch in horizontal stack");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

Matrix delete_col(const Matrix& a, int col) {
    if (col < 0 || col >= a.cols()) throw Error("column index out of range");
    Matrix out(a.field(), a.rows(), a.cols() - 1);
    for (int i = 0; i < a.rows(); ++i) {
        int oj = 0;
        for (int j = 0; j < a.cols(); ++j) {
            if (j == col) continue;
            out.at(i, oj++) = a.at(i, j);
        }
    }
    return out;
}

Matrix append_parity_col(const Matrix& a) {
    const Field& F = *a.field();
    Matrix out(a.field(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        int s = 0;
        for (int j = 0; j < a.cols(); ++j) {
            out.at(i, j) = a.at(i, j);
            s = F.add(s, a.at(i, j));
        }
        out.at(i, a.cols()) = F.neg(s);
    }
    return out;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_basis(a) == row_basis(b);
}

Matrix take_rows(const Matrix& a, int r0, int r1) {
    if (r0 < 0 || r1 < r0 || r1 > a.rows()) throw Error("row range out of bounds");
    Matrix out(a.field(), r1 - r0, a.cols());
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i - r0, j) = a.at(i, j);
    return out;
}

int vector_weight(const std::vector<int>& v) {
    int w = 0;
    for (int x : v)
        if (x) ++w;
    return w;
}

}  // namespace ccode
