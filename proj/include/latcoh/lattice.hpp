#pragma once

#include "latcoh/exterior.hpp"
#include "latcoh/smith.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace latcoh {

/// Z^n with an action of Z/m through the matrix of a fixed generator t.
///
/// `m` need not equal the exact multiplicative order of the matrix; the
/// order is recorded separately and always divides m.
class CyclicAction {
  public:
    std::size_t rank() const { return action_.rows(); }
    std::int64_t modulus() const { return m_; }
    std::int64_t matrix_order() const { return order_; }
    const IntegerMatrix& matrix() const { return action_; }
    const std::string& label() const { return label_; }

    /// Matrix of t^{-1}; equals A^{order-1}.
    const IntegerMatrix& inverse_matrix() const { return inverse_; }

    CyclicAction with_label(std::string label) const {
        CyclicAction copy = *this;
        copy.label_ = std::move(label);
        return copy;
    }

    friend bool operator==(const CyclicAction& a, const CyclicAction& b) {
        return a.m_ == b.m_ && a.action_ == b.action_;
    }

  private:
    friend CyclicAction make_action(std::int64_t m, IntegerMatrix matrix, std::string label);

    std::int64_t m_ = 1;
    std::int64_t order_ = 1;
    IntegerMatrix action_;
    IntegerMatrix inverse_;
    std::string label_;
};

/// Validates that `matrix` is an automorphism of Z^n with matrix^m = I.
inline CyclicAction make_action(std::int64_t m, IntegerMatrix matrix, std::string label = {}) {
    if (m < 1) throw usage_error("make_action: group order must be at least 1");
    if (!matrix.is_square()) throw usage_error("make_action: action matrix must be square");
    // Walk powers up to m; the first identity is the exact order. A power
    // equal to I already forces det = +-1, so the determinant is only needed
    // for the diagnostic.
    const std::size_t n = matrix.rows();
    IntegerMatrix power = IntegerMatrix::identity(n);
    IntegerMatrix previous = power;
    std::int64_t order = 0;
    for (std::int64_t k = 1; k <= m; ++k) {
        previous = power;
        power = power * matrix;
        if (power.is_identity()) {
            order = k;
            break;
        }
    }
    if (order == 0 || m % order != 0) {
        const Integer det = determinant(matrix);
        if (det != 1 && det != -1)
            throw usage_error("make_action: invalid action, |det| = " + abs(det).str() + " != 1");
        throw usage_error("make_action: invalid action, matrix^" + std::to_string(m) + " != identity");
    }
    CyclicAction a;
    a.m_ = m;
    a.order_ = order;
    a.action_ = std::move(matrix);
    a.inverse_ = std::move(previous);
    a.label_ = std::move(label);
    return a;
}

/// True iff every nontrivial group element fixes only the origin; it suffices
/// to test the elements of prime order t^{m/q}.
inline bool is_free_outside_origin(const CyclicAction& a) {
    const std::size_t n = a.rank();
    for (std::int64_t q : prime_divisors(a.modulus())) {
        IntegerMatrix g = matrix_power(a.matrix(), static_cast<std::size_t>(a.modulus() / q));
        if (kernel_basis(g - IntegerMatrix::identity(n)).cols() != 0) return false;
    }
    return true;
}

inline CyclicAction exterior_power(const CyclicAction& a, std::size_t j) {
    if (j > a.rank()) throw usage_error("exterior_power: degree " + std::to_string(j) + " exceeds rank");
    return make_action(a.modulus(), exterior_power_matrix(a.matrix(), j),
                       "L" + std::to_string(j) + "(" + a.label() + ")");
}

/// Contragredient action (A^{-1})^T on hom(L, Z).
inline CyclicAction dual(const CyclicAction& a) {
    return make_action(a.modulus(), a.inverse_matrix().transpose(), "dual(" + a.label() + ")");
}

inline CyclicAction direct_sum(const CyclicAction& a, const CyclicAction& b) {
    if (a.modulus() != b.modulus()) throw usage_error("direct_sum: group orders differ");
    return make_action(a.modulus(), block_diagonal(a.matrix(), b.matrix()), a.label() + "+" + b.label());
}

inline CyclicAction tensor(const CyclicAction& a, const CyclicAction& b) {
    if (a.modulus() != b.modulus()) throw usage_error("tensor: group orders differ");
    return make_action(a.modulus(), kronecker(a.matrix(), b.matrix()), a.label() + "*" + b.label());
}

/// hom_Z(U, V) with t acting by phi -> A_V phi A_U^{-1}. A homomorphism is
/// flattened column-major: entry (row r, col c) sits at c * rank(V) + r.
inline CyclicAction hom_lattice(const CyclicAction& u, const CyclicAction& v) {
    if (u.modulus() != v.modulus()) throw usage_error("hom_lattice: group orders differ");
    const std::size_t nu = u.rank();
    const std::size_t nv = v.rank();
    IntegerMatrix act(nu * nv, nu * nv);
    for (std::size_t c = 0; c < nu; ++c)
        for (std::size_t r = 0; r < nv; ++r) {
            // Image of the elementary map E_{rc}: column j of A_V E A_U^{-1} is A_V[:, r] * Uinv(c, j).
            for (std::size_t j = 0; j < nu; ++j) {
                const Integer& w = u.inverse_matrix()(c, j);
                if (w == 0) continue;
                for (std::size_t i = 0; i < nv; ++i) act(j * nv + i, c * nv + r) += v.matrix()(i, r) * w;
            }
        }
    return make_action(u.modulus(), std::move(act), "hom(" + u.label() + "," + v.label() + ")");
}

inline IntegerVector flatten_hom(const IntegerMatrix& phi) {
    IntegerVector out;
    out.reserve(phi.rows() * phi.cols());
    for (std::size_t c = 0; c < phi.cols(); ++c)
        for (std::size_t r = 0; r < phi.rows(); ++r) out.push_back(phi(r, c));
    return out;
}

inline CyclicAction trivial_action(std::int64_t m, std::size_t n) {
    return make_action(m, IntegerMatrix::identity(n), "triv" + std::to_string(n));
}

/// Z G / (1 + t^d + ... + t^{m-d}) for d | m, in the basis e_0..e_{m-d-1}:
/// e_i -> e_{i+1}, and e_{m-d-1} -> -(e_0 + e_d + ... + e_{m-2d}).
inline CyclicAction syzygy_lattice(std::int64_t m, std::int64_t d) {
    if (m < 1 || d < 1 || m % d != 0) throw usage_error("syzygy_lattice: d must divide m");
    const auto n = static_cast<std::size_t>(m - d);
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i + 1, i) = 1;
    if (n > 0)
        for (std::int64_t k = 0; k <= m - 2 * d; k += d) a(static_cast<std::size_t>(k), n - 1) = -1;
    return make_action(m, std::move(a), "syzygy:" + std::to_string(m) + ":" + std::to_string(d));
}

/// Z[zeta_{p^r}] as the syzygy lattice with d = p^{r-1}.
inline CyclicAction cyclotomic_lattice(std::int64_t p, std::int64_t r) {
    if (!is_prime(p)) throw usage_error("cyclotomic_lattice: " + std::to_string(p) + " is not prime");
    if (r < 1) throw usage_error("cyclotomic_lattice: exponent must be at least 1");
    std::int64_t d = 1;
    for (std::int64_t i = 1; i < r; ++i) d *= p;
    return syzygy_lattice(d * p, d).with_label("cyclotomic:" + std::to_string(p) + ":" + std::to_string(r));
}

/// Z[G/H] for |H| = h: cyclic shift on m/h basis vectors.
inline CyclicAction permutation_lattice(std::int64_t m, std::int64_t h) {
    if (m < 1 || h < 1 || m % h != 0) throw usage_error("permutation_lattice: subgroup order must divide m");
    const auto n = static_cast<std::size_t>(m / h);
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a((i + 1) % n, i) = 1;
    return make_action(m, std::move(a), "permutation:" + std::to_string(m) + ":" + std::to_string(h));
}

inline CyclicAction sign_action() { return make_action(2, IntegerMatrix{{-1}}, "sign"); }

inline CyclicAction gauss_action() { return make_action(4, IntegerMatrix{{0, -1}, {1, 0}}, "gauss"); }

/// Rank-3, order-4 lattice with a nonvanishing first obstruction class.
inline CyclicAction paper_example_3() {
    return make_action(4, IntegerMatrix{{0, 1, 0}, {-1, 0, 1}, {0, 0, 1}}, "paper3");
}

/// Rank-6, order-4 lattice X + Lambda^2(X)^dual for X = paper_example_3().
inline CyclicAction paper_example_6() {
    return make_action(4,
                       IntegerMatrix{{0, 1, 0, 0, 0, 0},
                                     {-1, 0, 1, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 0},
                                     {0, 0, 0, -1, 0, 1},
                                     {0, 0, 0, 0, -1, 0}},
                       "paper6");
}

} // namespace latcoh
