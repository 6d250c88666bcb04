#pragma once

#include "latcoh/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <cstddef>
#include <vector>

// Exterior algebra of Z^n in the lexicographic wedge basis: position k of
// Lambda^j corresponds to the k-th lexicographically ordered j-subset
// {i_1 < ... < i_j}, i.e. the basis element e_{i_1} ^ ... ^ e_{i_j}.

namespace latcoh {

using Subset = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// All j-subsets of {0..n-1} in lexicographic order.
inline std::vector<Subset> subsets(std::size_t n, std::size_t j) {
    std::vector<Subset> out;
    if (j > n) return out;
    Subset s(j);
    for (std::size_t i = 0; i < j; ++i) s[i] = i;
    for (;;) {
        out.push_back(s);
        std::size_t i = j;
        while (i > 0 && s[i - 1] == n - j + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t k = i; k < j; ++k) s[k] = s[k - 1] + 1;
    }
    return out;
}

/// Lexicographic rank of a sorted subset among all |s|-subsets of {0..n-1}.
inline std::size_t subset_index(std::size_t n, const Subset& s) {
    const std::size_t j = s.size();
    std::size_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t pos = 0; pos < j; ++pos) {
        for (std::size_t v = (pos == 0 ? 0 : prev + 1); v < s[pos]; ++v) rank += binomial(n - v - 1, j - pos - 1);
        prev = s[pos];
    }
    return rank;
}

/// Sorts a list of basis indices, returning the permutation sign, or 0 when
/// an index repeats (the wedge vanishes).
inline int sort_with_sign(Subset& s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        for (std::size_t k = i; k > 0 && s[k - 1] >= s[k]; --k) {
            if (s[k - 1] == s[k]) return 0;
            std::swap(s[k - 1], s[k]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] == s[i]) return 0;
    return sign;
}

/// u ^ v for u in Lambda^p Z^n, v in Lambda^q Z^n.
inline IntegerVector wedge(std::size_t n, std::size_t p, const IntegerVector& u, std::size_t q, const IntegerVector& v) {
    if (u.size() != binomial(n, p) || v.size() != binomial(n, q)) throw usage_error("wedge: vector length mismatch");
    IntegerVector out(binomial(n, p + q));
    if (p + q > n) return out;
    const auto sp = subsets(n, p);
    const auto sq = subsets(n, q);
    for (std::size_t a = 0; a < sp.size(); ++a) {
        if (u[a] == 0) continue;
        for (std::size_t b = 0; b < sq.size(); ++b) {
            if (v[b] == 0) continue;
            Subset s = sp[a];
            s.insert(s.end(), sq[b].begin(), sq[b].end());
            int sign = sort_with_sign(s);
            if (sign == 0) continue;
            out[subset_index(n, s)] += sign * u[a] * v[b];
        }
    }
    return out;
}

/// Matrix of Lambda^j(A) in the lexicographic wedge basis. Column S is
/// A e_{s_1} ^ (column S \ s_1 of Lambda^{j-1} A), so the columns of each
/// level are built from the previous level. Subsets are held as bitmasks,
/// which limits the rank to 64. Degrees above the rank give the zero module.
inline IntegerMatrix exterior_power_matrix(const IntegerMatrix& a, std::size_t j) {
    if (!a.is_square()) throw usage_error("exterior_power_matrix: matrix not square");
    const std::size_t n = a.rows();
    if (j > n) return IntegerMatrix(0, 0);
    if (n > 64) throw usage_error("exterior_power_matrix: rank above 64 is not supported");
    using Mask = std::uint64_t;
    using Column = std::vector<std::pair<Mask, Integer>>;
    auto mask_of = [](const Subset& s) {
        Mask m = 0;
        for (std::size_t i : s) m |= Mask{1} << i;
        return m;
    };

    std::vector<Column> prev{Column{{Mask{0}, Integer(1)}}};
    for (std::size_t level = 1; level <= j; ++level) {
        const auto basis = subsets(n, level);
        std::vector<Column> cur(basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const Subset rest(basis[c].begin() + 1, basis[c].end());
            const Column& tail = prev[subset_index(n, rest)];
            const std::size_t head = basis[c][0];
            Column terms;
            for (std::size_t i = 0; i < n; ++i) {
                const Integer& aij = a(i, head);
                if (aij == 0) continue;
                const Mask bit = Mask{1} << i;
                for (const auto& [mask, coeff] : tail) {
                    if (mask & bit) continue;
                    const bool odd = std::popcount(mask & (bit - 1)) % 2 == 1;
                    terms.emplace_back(mask | bit, odd ? Integer(-(aij * coeff)) : Integer(aij * coeff));
                }
            }
            std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            Column merged;
            for (auto& t : terms) {
                if (!merged.empty() && merged.back().first == t.first) merged.back().second += t.second;
                else merged.push_back(std::move(t));
            }
            std::erase_if(merged, [](const auto& t) { return t.second == 0; });
            cur[c] = std::move(merged);
        }
        prev = std::move(cur);
    }

    const auto basis = subsets(n, j);
    std::unordered_map<Mask, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(mask_of(basis[k]), k);
    IntegerMatrix out(basis.size(), basis.size());
    for (std::size_t c = 0; c < prev.size(); ++c)
        for (const auto& [mask, coeff] : prev[c]) out(index.at(mask), c) = coeff;
    return out;
}

} // namespace latcoh
