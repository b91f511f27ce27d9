#pragma once

// Dense exact linear algebra over the rationals (GMP mpq). Matrices here are
// small (desk scale); everything is computed by exact Gaussian elimination.

#include <gmpxx.h>

#include <cassert>
#include <vector>

namespace nakct {

using Rat = mpq_class;

class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }
    const Rat& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    bool is_zero() const;
    QMat transpose() const;

    // this * rhs
    QMat mul(const QMat& rhs) const;
    QMat add(const QMat& rhs) const;
    QMat sub(const QMat& rhs) const;

    // Stack columns of two matrices with equal row count: [this | rhs].
    QMat hcat(const QMat& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

int rank(QMat m);

// Basis of the right kernel {v : M v = 0}, returned as columns.
QMat nullspace(const QMat& m);

// Solve A x = b for a single column b. Returns false when inconsistent.
bool solve_consistent(const QMat& a, const QMat& b, QMat& x);

}  // namespace nakct
