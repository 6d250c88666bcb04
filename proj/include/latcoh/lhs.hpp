#pragma once

#include "latcoh/alpha.hpp"
#include "latcoh/cohomology.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace latcoh {

/// Column of the stored window that represents H^i for i >= 0: 0 stays 0,
/// odd degrees fold to 1 and even degrees >= 2 fold to 2.
inline int fold_degree(int i) {
    if (i < 0) throw usage_error("fold_degree: negative degree");
    if (i == 0) return 0;
    return i % 2 == 1 ? 1 : 2;
}

/// E_2^{i,j} = H^i(G; Lambda^j L^dual) for j = 0..n. Only columns 0, 1, 2 are
/// computed; the rest are read off by periodicity.
class E2Page {
  public:
    E2Page(const CyclicAction& a, int i_max) : action_(a), i_max_(i_max) {
        if (i_max < 2) throw usage_error("build_e2: i_max must be at least 2");
        const CyclicAction d = dual(a);
        for (std::size_t j = 0; j <= a.rank(); ++j) {
            CyclicAction coeff = exterior_power(d, j);
            NormOperators ops = operators(coeff);
            cells_.push_back({group_cohomology(coeff, 0, ops), group_cohomology(coeff, 1, ops),
                              group_cohomology(coeff, 2, ops)});
            coefficients_.push_back(std::move(coeff));
        }
    }

    const CyclicAction& action() const { return action_; }
    int i_max() const { return i_max_; }
    std::size_t rows() const { return cells_.size(); }
    const CyclicAction& coefficient(std::size_t j) const { return coefficients_.at(j); }

    const CohomologyGroup& cell(int i, std::size_t j) const {
        return cells_.at(j)[static_cast<std::size_t>(fold_degree(i))];
    }

    std::optional<Integer> order(int i, std::size_t j) const { return cell(i, j).structure().order(); }

  private:
    CyclicAction action_;
    int i_max_ = 4;
    std::vector<CyclicAction> coefficients_;
    std::vector<std::array<CohomologyGroup, 3>> cells_;
};

inline E2Page build_e2(const CyclicAction& a, int i_max = 4) { return E2Page(a, i_max); }

/// d_2 : E_2^{r,s+1} -> E_2^{r+2,s} in structure coordinates.
struct D2Block {
    int r = 0;
    std::size_t s = 0;
    IntegerMatrix matrix;
};

struct D2Witness {
    int r = 0;
    std::size_t s = 0;
    std::size_t column = 0;
};

struct DifferentialReport {
    std::vector<D2Block> maps;
    bool all_zero = true;
    std::vector<D2Witness> witnesses;
    bool squares_to_zero = true;

    const D2Block& block(int r, std::size_t s) const {
        for (const D2Block& b : maps)
            if (b.r == r && b.s == s) return b;
        throw usage_error("differential report: no block at r = " + std::to_string(r) + ", s = " + std::to_string(s));
    }
};

namespace detail {

inline IntegerMatrix reduce_to_target(const IntegerMatrix& m, const AbelianGroupStructure& target) {
    return reduce_rows(m, target.moduli());
}

} // namespace detail

/// d_2 on E_2^{r,s+1}, r = 0, 1, 2: the coefficient map dual to alpha_s,
/// times (-1)^r, followed by the periodicity identification of column r + 2.
/// For r = 0 the image of an invariant lands in ker(A - I) / im N.
inline DifferentialReport d2(const E2Page& page, const AlphaData& alpha) {
    const std::size_t n = page.action().rank();
    DifferentialReport report;
    for (int r = 0; r <= 2; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            IntegerMatrix coeff = alpha_s_wedge(alpha, s).transpose();
            if (r % 2 == 1) coeff = -coeff;
            const CohomologyGroup& src = page.cell(r, s + 1);
            const CohomologyGroup& dst = page.cell(r + 2, s);
            D2Block b{r, s, induced_map(coeff, src.presentation, dst.presentation)};
            b.matrix = detail::reduce_to_target(b.matrix, dst.structure());
            for (std::size_t c = 0; c < b.matrix.cols(); ++c)
                if (!is_zero_vector(b.matrix.col(c))) {
                    report.all_zero = false;
                    report.witnesses.push_back({r, s, c});
                }
            report.maps.push_back(std::move(b));
        }
    }
    // d_2 o d_2 : E_2^{r,s+1} -> E_2^{r+4,s-1}.
    for (const D2Block& first : report.maps) {
        if (first.s == 0) continue;
        const D2Block& second = report.block(fold_degree(first.r + 2), first.s - 1);
        const IntegerMatrix composite =
            detail::reduce_to_target(second.matrix * first.matrix, page.cell(first.r + 4, first.s - 1).structure());
        if (!composite.is_zero()) report.squares_to_zero = false;
    }
    return report;
}

inline DifferentialReport d2(const CyclicAction& a, const AlphaOptions& opts = {}) {
    return d2(build_e2(a), compute_alpha(a, opts));
}

/// Homology of (E_2, d_2) over the columns 0..i_max.
class E3Page {
  public:
    E3Page(const E2Page& page, const DifferentialReport& diff) : i_max_(page.i_max()) {
        const std::size_t rows = page.rows();
        for (int i = 0; i <= i_max_; ++i) {
            std::vector<AbelianGroupStructure> column;
            for (std::size_t j = 0; j < rows; ++j) {
                const AbelianGroupStructure& middle = page.cell(i, j).structure();
                const std::size_t k = middle.generator_count();
                IntegerMatrix in(k, 0);
                if (i >= 2 && j + 1 < rows) in = diff.block(fold_degree(i - 2), j).matrix;
                IntegerMatrix out(0, k);
                AbelianGroupStructure target;
                if (j >= 1) {
                    out = diff.block(fold_degree(i), j - 1).matrix;
                    target = page.cell(i + 2, j - 1).structure();
                }
                column.push_back(homology_at(middle, in, out, target));
            }
            cells_.push_back(std::move(column));
        }
    }

    int i_max() const { return i_max_; }
    const AbelianGroupStructure& cell(int i, std::size_t j) const {
        return cells_.at(static_cast<std::size_t>(i)).at(j);
    }

  private:
    int i_max_ = 4;
    std::vector<std::vector<AbelianGroupStructure>> cells_;
};

inline E3Page build_e3(const E2Page& page, const DifferentialReport& diff) { return E3Page(page, diff); }

inline bool collapse_at_d2(const CyclicAction& a, const AlphaOptions& opts = {}) { return d2(a, opts).all_zero; }

struct EulerRatio {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// prod_j (|E_2^{2k-j,j}| / |E_2^{2k+1-j,j}|) against h_hat(chi_h(L)), for 2k > n.
inline EulerRatio euler_ratio_check(const E2Page& page, int k) {
    const std::size_t n = page.action().rank();
    if (k < 0 || static_cast<std::size_t>(2 * k) <= n)
        throw usage_error("euler_ratio_check: need 2k > n (n = " + std::to_string(n) + ")");
    EulerRatio out;
    out.lhs = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        const int even = 2 * k - static_cast<int>(j);
        const auto num = page.order(even, j);
        const auto den = page.order(even + 1, j);
        if (!num || !den) throw internal_error("euler_ratio_check: infinite E_2 cell in positive degree");
        out.lhs *= Rational(*num, *den);
    }
    out.rhs = homological_euler_h(page.action());
    out.equal = out.lhs == out.rhs;
    return out;
}

inline EulerRatio euler_ratio_check(const CyclicAction& a, int k) { return euler_ratio_check(build_e2(a), k); }

struct PrimeCaseReport {
    std::int64_t p = 0;
    std::size_t s = 0;
    Integer h1_order;
    Integer p_to_s;
    bool h1_matches = false;
    Rational euler_ratio;
    int k = 0;
    /// The stated identity: ratio = p^s.
    bool ratio_matches_p_to_s = false;
    /// The count implied by H^{2k}(Gamma) = (Z/p)^{|H^1(G;L)|}: ratio = p^{|H^1|}.
    Integer p_to_h1;
    bool ratio_matches_p_to_h1 = false;
};

/// Order bookkeeping when m = p is prime and the action is free outside the origin.
inline PrimeCaseReport prime_case_report(const CyclicAction& a) {
    const std::int64_t p = a.modulus();
    if (!is_prime(p)) throw usage_error("prime_case_report: group order " + std::to_string(p) + " is not prime");
    if (!is_free_outside_origin(a)) throw usage_error("prime_case_report: action is not free outside the origin");
    const std::size_t n = a.rank();
    if (n % static_cast<std::size_t>(p - 1) != 0)
        throw usage_error("prime_case_report: p - 1 = " + std::to_string(p - 1) + " does not divide n = " +
                          std::to_string(n));
    PrimeCaseReport rep;
    rep.p = p;
    rep.s = n / static_cast<std::size_t>(p - 1);
    const auto h1 = group_cohomology(a, 1).structure().order();
    if (!h1) throw internal_error("prime_case_report: H^1 of a lattice must be finite");
    rep.h1_order = *h1;
    rep.p_to_s = ipow(Integer(p), static_cast<unsigned>(rep.s));
    rep.h1_matches = rep.h1_order == rep.p_to_s;
    rep.k = static_cast<int>(n / 2 + 1);
    rep.euler_ratio = euler_ratio_check(a, rep.k).lhs;
    rep.ratio_matches_p_to_s = rep.euler_ratio == Rational(rep.p_to_s);
    const auto h1_small = to_int64(rep.h1_order);
    if (!h1_small || *h1_small > 4096) throw resource_error("prime_case_report: |H^1(G;L)| too large for p^{|H^1|}");
    rep.p_to_h1 = ipow(Integer(p), static_cast<unsigned>(*h1_small));
    rep.ratio_matches_p_to_h1 = rep.euler_ratio == Rational(rep.p_to_h1);
    return rep;
}

} // namespace latcoh
