#pragma once

// Slow reference computations that share no code path with the normal-form
// routines. They exist so results can be cross-checked.

#include "latcoh/exterior.hpp"
#include "latcoh/smith.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latcoh::oracle {

/// Leibniz expansion over all permutations; only for tiny matrices.
inline Integer leibniz_determinant(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Integer total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Integer term = sign;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(perm[i], i);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Lambda^j A from j x j minors: entry (I, J) = det A[I, J].
inline IntegerMatrix exterior_power_by_minors(const IntegerMatrix& a, std::size_t j) {
    const auto basis = subsets(a.rows(), j);
    IntegerMatrix out(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            out(r, c) = leibniz_determinant(a.submatrix(basis[r], basis[c]));
    return out;
}

/// Invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& m) {
    std::vector<Integer> out;
    Integer prev = 1;
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        Integer g = 0;
        for (const Subset& rows : subsets(m.rows(), k))
            for (const Subset& cols : subsets(m.cols(), k)) g = gcd(g, leibniz_determinant(m.submatrix(rows, cols)));
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline AbelianGroupStructure cokernel_by_minors(const IntegerMatrix& m) {
    return AbelianGroupStructure::from_invariant_factors(m.rows(), invariant_factors_by_minors(m));
}

/// For a finite cokernel G = Z^r / im M of order N, returns |G[d]| for every
/// d dividing N by enumerating (Z/N)^r. Returns nothing if N^r exceeds `limit`.
struct TorsionCounts {
    Integer order;
    std::vector<std::pair<std::int64_t, std::int64_t>> counts; // (d, |G[d]|)
};

inline std::optional<TorsionCounts> enumerate_cokernel(const IntegerMatrix& m, std::int64_t order,
                                                       std::int64_t limit = 200000) {
    const std::size_t r = m.rows();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        total *= order;
        if (total > limit) return std::nullopt;
    }
    // Subgroup H of (Z/N)^r generated by the columns, by closure.
    auto encode = [&](const std::vector<std::int64_t>& v) {
        std::int64_t idx = 0;
        for (std::int64_t x : v) idx = idx * order + x;
        return idx;
    };
    auto decode = [&](std::int64_t idx) {
        std::vector<std::int64_t> v(r);
        for (std::size_t i = r; i-- > 0;) {
            v[i] = idx % order;
            idx /= order;
        }
        return v;
    };
    std::vector<std::vector<std::int64_t>> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<std::int64_t> g(r);
        for (std::size_t i = 0; i < r; ++i) g[i] = static_cast<std::int64_t>(mod_floor(m(i, c), Integer(order)));
        gens.push_back(g);
    }
    std::vector<char> in_h(static_cast<std::size_t>(total), 0);
    std::vector<std::int64_t> frontier{0};
    in_h[0] = 1;
    std::int64_t h_size = 1;
    while (!frontier.empty()) {
        const std::int64_t cur = frontier.back();
        frontier.pop_back();
        const auto v = decode(cur);
        for (const auto& g : gens) {
            std::vector<std::int64_t> w(r);
            for (std::size_t i = 0; i < r; ++i) w[i] = (v[i] + g[i]) % order;
            const std::int64_t idx = encode(w);
            if (!in_h[static_cast<std::size_t>(idx)]) {
                in_h[static_cast<std::size_t>(idx)] = 1;
                ++h_size;
                frontier.push_back(idx);
            }
        }
    }
    TorsionCounts out;
    out.order = total / h_size;
    for (std::int64_t d = 1; d <= order; ++d) {
        if (order % d != 0) continue;
        std::int64_t hits = 0;
        for (std::int64_t x = 0; x < total; ++x) {
            auto v = decode(x);
            for (auto& e : v) e = (e * d) % order;
            if (in_h[static_cast<std::size_t>(encode(v))]) ++hits;
        }
        out.counts.emplace_back(d, hits / h_size);
    }
    return out;
}

/// |G[d]| for a finite group with the given invariant factors.
inline std::int64_t torsion_count(const AbelianGroupStructure& g, std::int64_t d) {
    Integer c = 1;
    for (const Integer& t : g.torsion) c *= gcd(t, Integer(d));
    return static_cast<std::int64_t>(c);
}

} // namespace latcoh::oracle
