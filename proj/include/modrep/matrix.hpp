#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "modrep/cyclotomic.hpp"

namespace modrep {

/// Dense matrix over a fixed cyclotomic field. Structurally-zero entries
/// (empty term maps) are skipped in products, so diagonal and signed
/// permutation matrices multiply in O(dim^2).
class CycMatrix {
  public:
    CycMatrix() : rows_(0), cols_(0), order_(1) {}

    CycMatrix(i64 rows, i64 cols, i64 order)
        : rows_(rows), cols_(cols), order_(order),
          data_(static_cast<std::size_t>(rows * cols), CycNum(order)) {}

    static CycMatrix identity(i64 n, i64 order) {
        CycMatrix m(n, n, order);
        for (i64 i = 0; i < n; ++i) m.at(i, i) = CycNum::one(order);
        return m;
    }

    i64 rows() const { return rows_; }
    i64 cols() const { return cols_; }
    i64 order() const { return order_; }

    CycNum& at(i64 i, i64 j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const CycNum& at(i64 i, i64 j) const {
        return data_[static_cast<std::size_t>(i * cols_ + j)];
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.cols_ != b.rows_ || a.order_ != b.order_)
            throw std::invalid_argument("CycMatrix: incompatible product");
        CycMatrix out(a.rows_, b.cols_, a.order_);
        for (i64 i = 0; i < a.rows_; ++i)
            for (i64 k = 0; k < a.cols_; ++k) {
                const CycNum& aik = a.at(i, k);
                if (aik.terms().empty()) continue;
                for (i64 j = 0; j < b.cols_; ++j) {
                    const CycNum& bkj = b.at(k, j);
                    if (bkj.terms().empty()) continue;
                    out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend CycMatrix operator*(const CycNum& s, CycMatrix m) {
        for (auto& e : m.data_) e = s * e;
        return m;
    }

    CycMatrix pow(i64 k) const {
        if (rows_ != cols_) throw std::invalid_argument("CycMatrix::pow: square matrix required");
        CycMatrix acc = identity(rows_, order_);
        CycMatrix base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = (k >>= 1) ? base * base : base;
        }
        return acc;
    }

    CycMatrix transpose() const {
        CycMatrix out(cols_, rows_, order_);
        for (i64 i = 0; i < rows_; ++i)
            for (i64 j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    CycMatrix conj() const {
        CycMatrix out(rows_, cols_, order_);
        for (i64 i = 0; i < rows_; ++i)
            for (i64 j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).conj();
        return out;
    }

    bool equals(const CycMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_ || order_ != other.order_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (data_[i] != other.data_[i]) return false;
        return true;
    }

    bool is_identity_times(const CycNum& s) const {
        for (i64 i = 0; i < rows_; ++i)
            for (i64 j = 0; j < cols_; ++j) {
                if (i == j) {
                    if (at(i, j) != s) return false;
                } else if (!at(i, j).is_zero()) {
                    return false;
                }
            }
        return true;
    }

    /// If the matrix equals s*I for some scalar s, return s.
    std::optional<CycNum> as_scalar_identity() const {
        if (rows_ != cols_ || rows_ == 0) return std::nullopt;
        CycNum s = at(0, 0);
        for (i64 i = 0; i < rows_; ++i)
            for (i64 j = 0; j < cols_; ++j) {
                if (i == j) {
                    if (at(i, j) != s) return std::nullopt;
                } else if (!at(i, j).is_zero()) {
                    return std::nullopt;
                }
            }
        return s;
    }

  private:
    void check_same_shape(const CycMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_ || order_ != b.order_)
            throw std::invalid_argument("CycMatrix: shape/order mismatch");
    }

    i64 rows_, cols_, order_;
    std::vector<CycNum> data_;
};

/// If A = c*B entrywise for a single scalar c, return c (B must be nonzero
/// somewhere; entries are compared exactly by cross-multiplication).
inline std::optional<CycNum> entrywise_ratio(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.order() != b.order())
        return std::nullopt;
    std::optional<CycNum> c;
    for (i64 i = 0; i < a.rows() && !c; ++i)
        for (i64 j = 0; j < a.cols() && !c; ++j)
            if (!b.at(i, j).is_zero()) c = a.at(i, j) / b.at(i, j);
    if (!c) return std::nullopt;
    for (i64 i = 0; i < a.rows(); ++i)
        for (i64 j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != *c * b.at(i, j)) return std::nullopt;
    return c;
}

/// Signed permutation acting on basis vectors by e_j -> sign[j] * e_{dest[j]}.
struct SignedPerm {
    std::vector<i64> dest;
    std::vector<int> sign;

    i64 dim() const { return static_cast<i64>(dest.size()); }

    static SignedPerm identity(i64 n) {
        SignedPerm p;
        p.dest.resize(static_cast<std::size_t>(n));
        p.sign.assign(static_cast<std::size_t>(n), 1);
        for (i64 i = 0; i < n; ++i) p.dest[static_cast<std::size_t>(i)] = i;
        return p;
    }

    SignedPerm compose(const SignedPerm& then) const {
        SignedPerm out = identity(dim());
        for (i64 j = 0; j < dim(); ++j) {
            i64 mid = dest[static_cast<std::size_t>(j)];
            out.dest[static_cast<std::size_t>(j)] = then.dest[static_cast<std::size_t>(mid)];
            out.sign[static_cast<std::size_t>(j)] =
                sign[static_cast<std::size_t>(j)] * then.sign[static_cast<std::size_t>(mid)];
        }
        return out;
    }

    SignedPerm inverse() const {
        SignedPerm out = identity(dim());
        for (i64 j = 0; j < dim(); ++j) {
            i64 d = dest[static_cast<std::size_t>(j)];
            out.dest[static_cast<std::size_t>(d)] = j;
            out.sign[static_cast<std::size_t>(d)] = sign[static_cast<std::size_t>(j)];
        }
        return out;
    }

    bool is_identity() const {
        for (i64 j = 0; j < dim(); ++j)
            if (dest[static_cast<std::size_t>(j)] != j || sign[static_cast<std::size_t>(j)] != 1)
                return false;
        return true;
    }

    CycMatrix to_matrix(i64 order) const {
        CycMatrix m(dim(), dim(), order);
        for (i64 j = 0; j < dim(); ++j)
            m.at(dest[static_cast<std::size_t>(j)], j) =
                CycNum::from_rational(order, sign[static_cast<std::size_t>(j)]);
        return m;
    }
};

/// Exact commutation test P*M == M*P without forming products:
/// P M P^-1 agrees with M iff M[p(i)][p(j)] == s_i s_j M[i][j] for all i, j.
inline bool commutes(const SignedPerm& p, const CycMatrix& m) {
    if (p.dim() != m.rows() || m.rows() != m.cols()) return false;
    for (i64 i = 0; i < m.rows(); ++i)
        for (i64 j = 0; j < m.cols(); ++j) {
            i64 pi = p.dest[static_cast<std::size_t>(i)];
            i64 pj = p.dest[static_cast<std::size_t>(j)];
            int s = p.sign[static_cast<std::size_t>(i)] * p.sign[static_cast<std::size_t>(j)];
            const CycNum& lhs = m.at(pi, pj);
            const CycNum& rhs = m.at(i, j);
            if (s == 1) {
                if (lhs != rhs) return false;
            } else {
                if (lhs != -rhs) return false;
            }
        }
    return true;
}

/// Dimension of the nullspace of a sparse linear system over Q(zeta), by
/// Gaussian elimination with fewest-nonzeros pivot selection. Rows map
/// column index -> coefficient.
inline i64 nullspace_dimension(std::vector<std::map<i64, CycNum>> rows, i64 num_cols) {
    auto trim_row = [](std::map<i64, CycNum>& row) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
    };
    for (auto& row : rows) trim_row(row);

    i64 rank = 0;
    while (true) {
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].empty() && (best == rows.size() || rows[i].size() < rows[best].size()))
                best = i;
        if (best == rows.size()) break;

        std::map<i64, CycNum> pivot_row = std::move(rows[best]);
        rows[best] = std::move(rows.back());
        rows.pop_back();

        const i64 pc = pivot_row.begin()->first;
        const CycNum inv = pivot_row.begin()->second.inverse();
        for (auto& [col, coeff] : pivot_row) coeff = inv * coeff;
        ++rank;

        for (auto& row : rows) {
            auto hit = row.find(pc);
            if (hit == row.end()) continue;
            CycNum factor = hit->second;
            row.erase(hit);
            for (const auto& [col, coeff] : pivot_row) {
                if (col == pc) continue;
                auto [it, inserted] = row.try_emplace(col, CycNum(coeff.order()));
                it->second -= factor * coeff;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }
    return num_cols - rank;
}

} // namespace modrep
