#pragma once

#include "latcoh/lattice.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace latcoh {

struct SamplerOptions {
    std::vector<std::int64_t> moduli{2, 3, 4, 5, 6};
    std::size_t min_rank = 1;
    std::size_t max_rank = 4;
    /// Off-diagonal glue and conjugation coefficients are drawn from [-bound, bound].
    int entry_bound = 2;
    /// Rejects actions whose lifted words could grow past this length.
    std::size_t word_bound = 200000;
};

namespace detail {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Indecomposable-ish building blocks whose order divides m.
inline std::vector<IntegerMatrix> block_catalog(std::int64_t m, std::size_t max_rank) {
    std::vector<IntegerMatrix> out{IntegerMatrix{{1}}};
    auto add = [&](const IntegerMatrix& b) {
        if (b.rows() >= 1 && b.rows() <= max_rank) out.push_back(b);
    };
    for (std::int64_t d = 2; d <= m; ++d) {
        if (m % d != 0) continue;
        // Z[zeta_d] and the other syzygies of Z[Z/d], plus permutation lattices.
        for (std::int64_t e = 1; e < d; ++e)
            if (d % e == 0) add(syzygy_lattice(d, e).matrix());
        add(permutation_lattice(d, 1).matrix());
    }
    if (m % 6 == 0) add(IntegerMatrix{{0, -1}, {1, 1}});
    return out;
}

struct Unimodular {
    IntegerMatrix p;
    IntegerMatrix p_inv;
};

/// Product of random elementary row operations, with its inverse.
inline Unimodular random_unimodular(std::mt19937_64& rng, std::size_t n, int bound, int steps) {
    Unimodular u{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
    if (n == 1 && uniform(rng, 0, 1) == 1) {
        u.p(0, 0) = -1;
        u.p_inv(0, 0) = -1;
    }
    if (n < 2) return u;
    for (int k = 0; k < steps; ++k) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
        if (j >= i) ++j;
        const Integer q = uniform(rng, -bound, bound);
        // E = I + q e_i e_j^T acts on rows of p; E^{-1} = I - q e_i e_j^T acts on columns of p_inv.
        for (std::size_t c = 0; c < n; ++c) u.p(i, c) += q * u.p(j, c);
        for (std::size_t r = 0; r < n; ++r) u.p_inv(r, j) -= q * u.p_inv(r, i);
    }
    return u;
}

inline Integer column_norm(const IntegerMatrix& m) {
    Integer best = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Integer s = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) s += abs(m(r, c));
        if (s > best) best = s;
    }
    return best;
}

} // namespace detail

/// A random valid action: a block upper-triangular matrix glued from the
/// catalog, conjugated by a random unimodular matrix. Deterministic for a
/// given generator state.
inline CyclicAction random_action(std::mt19937_64& rng, const SamplerOptions& opts = {}) {
    if (opts.moduli.empty() || opts.max_rank < 1 || opts.min_rank > opts.max_rank)
        throw usage_error("random_action: empty modulus list or rank range");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const std::int64_t m =
            opts.moduli[static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<std::int64_t>(opts.moduli.size()) - 1))];
        const auto target = static_cast<std::size_t>(
            detail::uniform(rng, static_cast<std::int64_t>(opts.min_rank), static_cast<std::int64_t>(opts.max_rank)));

        std::vector<IntegerMatrix> blocks;
        std::size_t n = 0;
        while (n < target) {
            const auto catalog = detail::block_catalog(m, target - n);
            blocks.push_back(catalog[static_cast<std::size_t>(
                detail::uniform(rng, 0, static_cast<std::int64_t>(catalog.size()) - 1))]);
            n += blocks.back().rows();
        }
        IntegerMatrix a(n, n);
        std::size_t offset = 0;
        for (const IntegerMatrix& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) a(offset + r, offset + c) = b(r, c);
            offset += b.rows();
        }
        // Random glue above the diagonal blocks, kept only if the order survives.
        IntegerMatrix glued = a;
        offset = 0;
        for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
            offset += blocks[k].rows();
            for (std::size_t r = 0; r < offset; ++r)
                for (std::size_t c = offset; c < offset + blocks[k + 1].rows(); ++c)
                    if (detail::uniform(rng, 0, 2) == 0) glued(r, c) = detail::uniform(rng, -opts.entry_bound, opts.entry_bound);
        }
        if (matrix_power(glued, static_cast<std::size_t>(m)).is_identity()) a = glued;

        const auto u = detail::random_unimodular(rng, n, opts.entry_bound, static_cast<int>(2 * n));
        if (!(u.p * u.p_inv).is_identity()) throw internal_error("random_action: bad unimodular inverse");
        IntegerMatrix conj = u.p * a * u.p_inv;

        CyclicAction act = make_action(m, std::move(conj), "random:" + std::to_string(m));
        const Integer norm = detail::column_norm(act.inverse_matrix());
        if (norm > 1 && ipow(norm, static_cast<unsigned>(m)) > Integer(opts.word_bound)) continue;
        return act;
    }
    throw resource_error("random_action: no action within bounds after 10000 attempts");
}

} // namespace latcoh
