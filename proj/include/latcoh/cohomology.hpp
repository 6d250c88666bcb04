#pragma once

#include "latcoh/lattice.hpp"
#include "latcoh/subquotient.hpp"

#include <cstdint>
#include <vector>

namespace latcoh {

/// Norm N = I + A + ... + A^{m-1} and augmentation A - I of a cyclic action.
struct NormOperators {
    IntegerMatrix norm;
    IntegerMatrix aug;
};

inline NormOperators operators(const CyclicAction& a) {
    const std::size_t n = a.rank();
    NormOperators ops;
    ops.aug = a.matrix() - IntegerMatrix::identity(n);
    // Horner: N = I + A(I + A(... )).
    IntegerMatrix norm = IntegerMatrix::identity(n);
    for (std::int64_t k = 1; k < a.modulus(); ++k) norm = IntegerMatrix::identity(n) + a.matrix() * norm;
    ops.norm = std::move(norm);
    if (!(ops.norm * ops.aug).is_zero() || !(ops.aug * ops.norm).is_zero())
        throw internal_error("operators: N (A - I) != 0");
    return ops;
}

struct CohomologyGroup {
    int degree = 0;
    SubquotientPresentation presentation;

    const AbelianGroupStructure& structure() const { return presentation.structure(); }
};

namespace detail {

inline CohomologyGroup even_group(int degree, std::size_t n, const NormOperators& ops) {
    return {degree, subquotient(n, ops.aug, ops.norm)};
}

inline CohomologyGroup odd_group(int degree, std::size_t n, const NormOperators& ops) {
    return {degree, subquotient(n, ops.norm, ops.aug)};
}

} // namespace detail

/// H^i(Z/m; L) from the 2-periodic resolution: H^0 = ker(A - I), odd degrees
/// ker N / im(A - I), even degrees >= 2 ker(A - I) / im N.
inline CohomologyGroup group_cohomology(const CyclicAction& a, int i, const NormOperators& ops) {
    if (i < 0) throw usage_error("group_cohomology: degree must be nonnegative");
    const std::size_t n = a.rank();
    if (i == 0) return {0, subquotient(n, ops.aug, IntegerMatrix(n, 0))};
    return (i % 2 == 1) ? detail::odd_group(i, n, ops) : detail::even_group(i, n, ops);
}

inline CohomologyGroup group_cohomology(const CyclicAction& a, int i) { return group_cohomology(a, i, operators(a)); }

/// Tate cohomology in any degree, by 2-periodicity.
inline CohomologyGroup tate(const CyclicAction& a, int i, const NormOperators& ops) {
    const std::size_t n = a.rank();
    return (((i % 2) + 2) % 2 == 0) ? detail::even_group(i, n, ops) : detail::odd_group(i, n, ops);
}

inline CohomologyGroup tate(const CyclicAction& a, int i) { return tate(a, i, operators(a)); }

/// |H^0^(G;M)| / |H^1^(G;M)|.
inline Rational h_hat(const CyclicAction& a) {
    const auto ops = operators(a);
    auto h0 = tate(a, 0, ops).structure().order();
    auto h1 = tate(a, 1, ops).structure().order();
    if (!h0 || !h1) throw internal_error("h_hat: Tate cohomology of a lattice must be finite");
    return Rational(*h0, *h1);
}

/// Product over j of h_hat(Lambda^j L^dual)^{(-1)^j}.
inline Rational homological_euler_h(const CyclicAction& a) {
    const CyclicAction d = dual(a);
    Rational result = 1;
    for (std::size_t j = 0; j <= a.rank(); ++j) {
        Rational h = h_hat(exterior_power(d, j));
        if (j % 2 == 0) result *= h;
        else result /= h;
    }
    return result;
}

namespace detail {

/// Rank over Z/p for a prime p < 2^62.
inline std::size_t rank_mod_prime(const IntegerMatrix& m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    const Integer pp = p;
    for (std::size_t k = 0; k < rows * cols; ++k)
        a[k] = static_cast<std::uint64_t>(mod_floor(m.entries()[k], pp));
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        const std::uint64_t inv = powmod(a[rank * cols + c], p - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = mulmod(a[i * cols + c], inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = mulmod(f, a[rank * cols + j]);
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

/// Rank over Q, taken as the maximum rank modulo two large primes.
inline std::size_t rational_rank(const IntegerMatrix& m) {
    return std::max(rank_mod_prime(m, 2305843009213693951ull), rank_mod_prime(m, 4611686018427387847ull));
}

/// Coboundary C^i -> C^{i+1} of normalized inhomogeneous bar cochains.
inline IntegerMatrix bar_coboundary(const CyclicAction& a, int i) {
    const std::size_t n = a.rank();
    const auto m = static_cast<std::size_t>(a.modulus());
    const std::size_t g = m - 1; // non-identity elements t^1 .. t^{m-1}
    std::vector<IntegerMatrix> powers{IntegerMatrix::identity(n)};
    for (std::size_t k = 1; k < m; ++k) powers.push_back(powers.back() * a.matrix());

    auto count = [g](int len) {
        std::size_t c = 1;
        for (int k = 0; k < len; ++k) c *= g;
        return c;
    };
    const std::size_t src = count(i), dst = count(i + 1);
    IntegerMatrix delta(dst * n, src * n);

    std::vector<std::size_t> tuple(static_cast<std::size_t>(i + 1));
    auto encode = [g](const std::vector<std::size_t>& exps) {
        std::size_t idx = 0;
        for (std::size_t e : exps) idx = idx * g + (e - 1);
        return idx;
    };
    auto add_block = [&](std::size_t row_block, std::size_t col_block, const IntegerMatrix& blk, int sign) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (blk(r, c) != 0) delta(row_block * n + r, col_block * n + c) += sign * blk(r, c);
    };

    for (std::size_t row = 0; row < dst; ++row) {
        std::size_t rem = row;
        for (std::size_t k = tuple.size(); k-- > 0;) {
            tuple[k] = rem % g + 1;
            rem /= g;
        }
        // g_1 . f(g_2, ..., g_{i+1})
        add_block(row, encode({tuple.begin() + 1, tuple.end()}), powers[tuple[0]], 1);
        // (-1)^k f(..., g_k g_{k+1}, ...)
        for (std::size_t k = 0; k + 1 < tuple.size(); ++k) {
            const std::size_t merged = (tuple[k] + tuple[k + 1]) % m;
            if (merged == 0) continue;
            std::vector<std::size_t> t;
            t.insert(t.end(), tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k));
            t.push_back(merged);
            t.insert(t.end(), tuple.begin() + static_cast<std::ptrdiff_t>(k + 2), tuple.end());
            add_block(row, encode(t), powers[0], (k + 1) % 2 == 0 ? 1 : -1);
        }
        // (-1)^{i+1} f(g_1, ..., g_i)
        add_block(row, encode({tuple.begin(), tuple.end() - 1}), powers[0], (i + 1) % 2 == 0 ? 1 : -1);
    }
    return delta;
}

} // namespace detail

inline constexpr std::size_t bar_oracle_size_limit = 20000;

/// H^i(Z/m; L) from explicit bar cochains, for cross-checking the periodic
/// resolution. Requires m^i * n <= bar_oracle_size_limit.
inline AbelianGroupStructure bar_oracle(const CyclicAction& a, int i) {
    if (i < 0 || i > 3) throw usage_error("bar_oracle: degree must be in 0..3");
    std::size_t size = a.rank();
    for (int k = 0; k < i; ++k) size *= static_cast<std::size_t>(a.modulus());
    if (size > bar_oracle_size_limit) throw resource_error("bar_oracle: cochain space too large");
    if (a.modulus() == 1) {
        // Trivial group: only H^0 survives.
        AbelianGroupStructure g;
        if (i == 0) g.free_rank = a.rank();
        return g;
    }
    const IntegerMatrix next = detail::bar_coboundary(a, i);
    if (i == 0) {
        AbelianGroupStructure g;
        g.free_rank = next.cols() - detail::rational_rank(next);
        return g;
    }
    const IntegerMatrix prev = detail::bar_coboundary(a, i - 1);
    if (!(next * prev).is_zero()) throw internal_error("bar_oracle: coboundary does not square to zero");
    auto snf = smith_normal_form(prev, false);
    AbelianGroupStructure g = AbelianGroupStructure::from_invariant_factors(prev.rows(), snf.diagonal());
    g.free_rank = prev.rows() - snf.rank - detail::rational_rank(next);
    return g;
}

} // namespace latcoh
