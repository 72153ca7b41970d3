#ifndef LIMINAL_LINALG_HPP
#define LIMINAL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "liminal/rational.hpp"

namespace liminal {

using QVector = std::vector<Rational>;

// Dense rational matrix, row-major.
class QMatrix {
   public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static QMatrix from_rows(const std::vector<QVector>& rows) {
        if (rows.empty()) return QMatrix();
        QMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[0].size(); ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVector operator*(const QVector& v) const {
        QVector r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    QMatrix operator*(const QMatrix& o) const {
        QMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

   private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

// Row echelon form by fraction-free (Bareiss) elimination. Rows are first
// scaled to integers; the one-step Bareiss update keeps every intermediate
// entry an exact integer. Returns the pivot columns; `m` is replaced by its
// echelon form.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::vector<std::vector<Integer>> clear_denominators(const QMatrix& m) {
    std::vector<std::vector<Integer>> z(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).denominator());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            z[i][j] = q.numerator() * (l / q.denominator());
        }
    }
    return z;
}

}  // namespace detail

inline std::size_t rank(const QMatrix& m) {
    auto z = detail::clear_denominators(m);
    return detail::bareiss_echelon(z).size();
}

// Exact basis of the right null space { v : M v = 0 }. One basis vector per
// free column, with a 1 in the free position and the pivot entries obtained
// by back substitution; the result is deterministic in the column order.
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
    const std::size_t cols = m.cols();
    auto z = detail::clear_denominators(m);
    auto pivots = detail::bareiss_echelon(z);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols, Rational(0));
        v[f] = Rational(1);
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t pc = pivots[k];
            if (pc > f) continue;  // echelon entries right of f in this row vanish on v
            Rational s(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero() && z[k][j] != 0) s += Rational(z[k][j]) * v[j];
            v[pc] = -s / Rational(z[k][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// A kernel vector of M with every coordinate nonzero, when one exists.
// Existence: the kernel lies in no coordinate hyperplane, i.e. every
// coordinate is touched by some kernel basis vector. The witness accumulates
// v <- v + t*b over the basis, with t the smallest positive integer that
// does not zero out any coordinate.
inline std::optional<QVector> all_nonzero_kernel_vector(const QMatrix& m) {
    const std::size_t cols = m.cols();
    if (cols == 0) return QVector{};
    auto basis = kernel_basis(m);
    for (std::size_t c = 0; c < cols; ++c) {
        bool touched = false;
        for (const auto& b : basis)
            if (!b[c].is_zero()) { touched = true; break; }
        if (!touched) return std::nullopt;
    }
    QVector v(cols, Rational(0));
    for (const auto& b : basis) {
        long t = 1;
        for (bool ok = false; !ok; ++t) {
            ok = true;
            for (std::size_t c = 0; c < cols; ++c) {
                if (b[c].is_zero()) continue;
                if (v[c] + Rational(t) * b[c] == Rational(0)) { ok = false; break; }
            }
            if (ok) break;
        }
        for (std::size_t c = 0; c < cols; ++c) v[c] += Rational(t) * b[c];
    }
    return v;
}

// Incrementally maintained echelonized span of rational vectors; used for
// rank growth tests while feeding in candidate vectors one at a time.
class IncrementalSpan {
   public:
    explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return rows_.size(); }

    // Reduces v against the current span. Returns true (and absorbs the
    // reduced vector) if v was independent.
    bool insert(QVector v) {
        reduce(v);
        std::size_t p = first_nonzero(v);
        if (p == dim_) return false;
        Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        rows_.push_back({p, std::move(v)});
        return true;
    }

    bool contains(QVector v) const {
        reduce(v);
        return first_nonzero(v) == dim_;
    }

   private:
    void reduce(QVector& v) const {
        for (const auto& [p, row] : rows_) {
            if (v[p].is_zero()) continue;
            Rational c = v[p];
            for (std::size_t j = p; j < dim_; ++j)
                if (!row[j].is_zero()) v[j] -= c * row[j];
        }
    }

    std::size_t first_nonzero(const QVector& v) const {
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) return j;
        return dim_;
    }

    std::size_t dim_;
    std::vector<std::pair<std::size_t, QVector>> rows_;  // pivot -> unit row
};

}  // namespace liminal

#endif  // LIMINAL_LINALG_HPP
