#pragma once

#include "latcoh/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcoh {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_i > 1 and t_i | t_{i+1}.
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    std::optional<Integer> order() const {
        if (free_rank != 0) return std::nullopt;
        Integer o = 1;
        for (const auto& t : torsion) o *= t;
        return o;
    }

    /// Number of generators in structure coordinates (torsion first, then free).
    std::size_t generator_count() const { return torsion.size() + free_rank; }

    /// Modulus per structure coordinate; 0 marks a free coordinate.
    std::vector<Integer> moduli() const {
        std::vector<Integer> out = torsion;
        out.resize(torsion.size() + free_rank, Integer(0));
        return out;
    }

    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        auto append = [&s](const std::string& part) {
            if (!s.empty()) s += " + ";
            s += part;
        };
        if (free_rank == 1) append("Z");
        else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
        for (const auto& t : torsion) append("Z/" + t.str());
        return s;
    }

    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;

    /// Structure of Z^ambient / diag(d) where d lists the (possibly shorter)
    /// diagonal of a Smith form in divisibility order.
    static AbelianGroupStructure from_invariant_factors(std::size_t ambient, const std::vector<Integer>& d) {
        AbelianGroupStructure g;
        std::size_t nonzero = 0;
        for (const auto& x : d) {
            if (x == 0) break;
            ++nonzero;
            if (x > 1) g.torsion.push_back(x);
        }
        g.free_rank = ambient - nonzero;
        return g;
    }
};

/// U * M * V = D with U, V unimodular; inverses are carried along for lifting.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    IntegerMatrix U_inv;
    IntegerMatrix V_inv;
    std::size_t rank = 0;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

/// Applies elementary operations to a matrix and mirrors them on optional
/// left/right transforms and their inverses.
class Reducer {
  public:
    Reducer(IntegerMatrix a, bool track_rows, bool track_cols)
        : a_(std::move(a)), track_rows_(track_rows), track_cols_(track_cols) {
        if (track_rows_) {
            u_ = IntegerMatrix::identity(a_.rows());
            u_inv_ = IntegerMatrix::identity(a_.rows());
        }
        if (track_cols_) {
            v_ = IntegerMatrix::identity(a_.cols());
            v_inv_ = IntegerMatrix::identity(a_.cols());
        }
    }

    IntegerMatrix& a() { return a_; }
    const IntegerMatrix& a() const { return a_; }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
        if (track_rows_) {
            for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
            for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, k));
        }
    }

    /// row_i += q * row_k, touching only columns >= first_col of the working matrix.
    void add_row(std::size_t i, std::size_t k, const Integer& q, std::size_t first_col = 0) {
        if (q == 0) return;
        for (std::size_t j = first_col; j < a_.cols(); ++j)
            if (a_(k, j) != 0) a_(i, j) += q * a_(k, j);
        if (track_rows_) {
            for (std::size_t j = 0; j < u_.cols(); ++j)
                if (u_(k, j) != 0) u_(i, j) += q * u_(k, j);
            for (std::size_t r = 0; r < u_inv_.rows(); ++r)
                if (u_inv_(r, i) != 0) u_inv_(r, k) -= q * u_inv_(r, i);
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
        if (track_rows_) {
            for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
            for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
        }
    }

    void swap_cols(std::size_t j, std::size_t l) {
        if (j == l) return;
        for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, l));
        if (track_cols_) {
            for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, l));
            for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(j, c), v_inv_(l, c));
        }
    }

    /// col_j += q * col_l, touching only rows >= first_row of the working matrix.
    void add_col(std::size_t j, std::size_t l, const Integer& q, std::size_t first_row = 0) {
        if (q == 0) return;
        for (std::size_t i = first_row; i < a_.rows(); ++i)
            if (a_(i, l) != 0) a_(i, j) += q * a_(i, l);
        if (track_cols_) {
            for (std::size_t i = 0; i < v_.rows(); ++i)
                if (v_(i, l) != 0) v_(i, j) += q * v_(i, l);
            for (std::size_t c = 0; c < v_inv_.cols(); ++c)
                if (v_inv_(j, c) != 0) v_inv_(l, c) -= q * v_inv_(j, c);
        }
    }

    IntegerMatrix take_u() { return std::move(u_); }
    IntegerMatrix take_u_inv() { return std::move(u_inv_); }
    IntegerMatrix take_v() { return std::move(v_); }
    IntegerMatrix take_v_inv() { return std::move(v_inv_); }
    IntegerMatrix take_a() { return std::move(a_); }

  private:
    IntegerMatrix a_;
    bool track_rows_;
    bool track_cols_;
    IntegerMatrix u_, u_inv_, v_, v_inv_;
};

} // namespace detail

/// Smith normal form with deterministic pivoting: the nonzero entry of
/// smallest absolute value in the active block, ties broken row-major.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& m, bool track = true) {
    detail::Reducer red(m, track, track);
    auto& a = red.a();
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // Global pivot search over the active block. A unit cannot be beaten,
        // so the first one in row-major order ends the search.
        std::size_t pi = rows, pj = cols;
        Integer best;
        bool unit = false;
        for (std::size_t i = t; i < rows && !unit; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Integer& x = a(i, j);
                if (x == 0) continue;
                if (x == 1 || x == -1) {
                    pi = i;
                    pj = j;
                    unit = true;
                    break;
                }
                if (pi == rows || abs(x) < best) {
                    best = abs(x);
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                red.add_row(i, t, -q, t);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                red.add_col(j, t, -q, t);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // Move the smallest remainder in row/column t onto the diagonal.
                std::size_t bi = t, bj = t;
                Integer b = abs(a(t, t));
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < b) {
                        b = abs(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < b) {
                        b = abs(a(t, j));
                        bi = t;
                        bj = j;
                    }
                red.swap_rows(t, bi);
                red.swap_cols(t, bj);
                continue;
            }
            if (a(t, t) == 1 || a(t, t) == -1) break;
            // Divisibility: fold in the first offending row.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            red.add_row(t, bad, Integer(1), t);
        }
    }
    for (std::size_t i = 0; i < t; ++i)
        if (a(i, i) < 0) red.negate_row(i);

    SmithDecomposition out;
    out.rank = t;
    out.D = red.take_a();
    if (track) {
        out.U = red.take_u();
        out.U_inv = red.take_u_inv();
        out.V = red.take_v();
        out.V_inv = red.take_v_inv();
    }
    return out;
}

/// Row-style Hermite normal form H = T * M: echelon rows, positive pivots,
/// entries above each pivot reduced into [0, pivot). Zero rows come last.
struct HermiteDecomposition {
    IntegerMatrix H;
    IntegerMatrix T;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

inline HermiteDecomposition hermite_normal_form(const IntegerMatrix& m, bool track = true) {
    detail::Reducer red(m, track, false);
    auto& a = red.a();
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    HermiteDecomposition out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = row; i < rows; ++i)
                if (a(i, col) != 0 && (best == rows || abs(a(i, col)) < abs(a(best, col)))) best = i;
            if (best == rows) break;
            red.swap_rows(row, best);
            bool done = true;
            for (std::size_t i = row + 1; i < rows; ++i) {
                if (a(i, col) == 0) continue;
                red.add_row(i, row, -(a(i, col) / a(row, col)), col);
                if (a(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0) red.negate_row(row);
        for (std::size_t i = 0; i < row; ++i)
            if (a(i, col) != 0) red.add_row(i, row, -floor_div(a(i, col), a(row, col)), col);
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.H = red.take_a();
    if (track) out.T = red.take_u();
    return out;
}

/// Canonical basis (as columns) of the lattice spanned by the columns of `gens`.
inline IntegerMatrix lattice_basis(const IntegerMatrix& gens) {
    auto h = hermite_normal_form(gens.transpose(), false);
    return h.H.row_range(0, h.rank).transpose();
}

/// Saturated Z-basis of {x : M x = 0}, as columns in Hermite-canonical form.
inline IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) return IntegerMatrix::identity(n);
    auto h = hermite_normal_form(m.transpose(), true);
    IntegerMatrix k = h.T.row_range(h.rank, n - h.rank);
    // Reduce the (already saturated) basis to its unique Hermite form.
    auto canon = hermite_normal_form(k, false);
    return canon.H.row_range(0, canon.rank).transpose();
}

/// Integer matrix P with P * K = I for a saturated full-column-rank K.
inline IntegerMatrix left_inverse(const IntegerMatrix& k) {
    auto h = hermite_normal_form(k, true);
    if (h.rank != k.cols()) throw contract_violation("left_inverse: columns are linearly dependent");
    for (std::size_t i = 0; i < k.cols(); ++i)
        if (h.H(i, i) != 1) throw contract_violation("left_inverse: column span is not saturated");
    return h.T.row_range(0, k.cols());
}

/// Some integral x with M x = b, or nullopt when none exists over Z.
inline std::optional<IntegerVector> solve_integral(const IntegerMatrix& m, const IntegerVector& b) {
    if (b.size() != m.rows()) throw usage_error("solve_integral: right-hand side length differs from row count");
    auto s = smith_normal_form(m);
    IntegerVector c = s.U * b;
    IntegerVector y(m.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.D(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

/// Z^rows / im(M).
inline AbelianGroupStructure cokernel_structure(const IntegerMatrix& m) {
    auto s = smith_normal_form(m, false);
    return AbelianGroupStructure::from_invariant_factors(m.rows(), s.diagonal());
}

inline std::size_t matrix_rank(const IntegerMatrix& m) { return hermite_normal_form(m, false).rank; }

/// Direct sum, renormalized to invariant-factor form.
inline AbelianGroupStructure direct_sum(const AbelianGroupStructure& a, const AbelianGroupStructure& b) {
    std::vector<Integer> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    auto s = smith_normal_form(IntegerMatrix::diagonal(all), false);
    auto tors = AbelianGroupStructure::from_invariant_factors(all.size(), s.diagonal());
    tors.free_rank = a.free_rank + b.free_rank;
    return tors;
}

} // namespace latcoh
