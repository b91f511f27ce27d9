#include "nakct/linalg.hpp"

namespace nakct {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int r = 0; r < rows_; r++)
        for (int c = 0; c < cols_; c++) t.at(c, r) = at(r, c);
    return t;
}

QMat QMat::mul(const QMat& rhs) const {
    assert(cols_ == rhs.rows_);
    QMat out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; r++)
        for (int k = 0; k < cols_; k++) {
            const Rat& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < rhs.cols_; c++) {
                if (rhs.at(k, c) == 0) continue;
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    return out;
}

QMat QMat::add(const QMat& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); i++) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

QMat QMat::sub(const QMat& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); i++) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

QMat QMat::hcat(const QMat& rhs) const {
    assert(rows_ == rhs.rows_);
    QMat out(rows_, cols_ + rhs.cols_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) out.at(r, c) = at(r, c);
        for (int c = 0; c < rhs.cols_; c++) out.at(r, cols_ + c) = rhs.at(r, c);
    }
    return out;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); col++) {
        int p = -1;
        for (int r = row; r < m.rows(); r++)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = col; c < m.cols(); c++) std::swap(m.at(p, c), m.at(row, c));
        Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols(); c++) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); r++) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols(); c++) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        row++;
    }
    return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

QMat nullspace(const QMat& m) {
    QMat e = m;
    std::vector<int> pivots = echelon(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int free_count = m.cols() - static_cast<int>(pivots.size());
    QMat basis(m.cols(), free_count);
    int idx = 0;
    for (int fc = 0; fc < m.cols(); fc++) {
        if (is_pivot[fc]) continue;
        basis.at(fc, idx) = 1;
        for (size_t pr = 0; pr < pivots.size(); pr++) basis.at(pivots[pr], idx) = -e.at(static_cast<int>(pr), fc);
        idx++;
    }
    return basis;
}

bool solve_consistent(const QMat& a, const QMat& b, QMat& x) {
    assert(a.rows() == b.rows() && b.cols() == 1);
    QMat aug = a.hcat(b);
    std::vector<int> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return false;  // pivot in rhs column
    x = QMat(a.cols(), 1);
    for (size_t pr = 0; pr < pivots.size(); pr++) x.at(pivots[pr], 0) = aug.at(static_cast<int>(pr), a.cols());
    return true;
}

}  // namespace nakct
