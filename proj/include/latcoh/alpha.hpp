#pragma once

#include "latcoh/cohomology.hpp"
#include "latcoh/free_group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latcoh {

struct AlphaOptions {
    LiftOrder order = LiftOrder::ascending;
    /// alpha_1 = sign * delta. The default -1 reproduces the worked example.
    int sign = -1;
    std::size_t word_cap = default_word_cap;
};

struct AlphaData {
    std::size_t rank = 0;
    int sign = -1;
    /// Lambda^2 L coordinates (rows) of delta(e_i) (column i).
    IntegerMatrix delta;
    IntegerMatrix alpha1_wedge;
    /// f^m(x_i) x_i^{-1} for each generator.
    std::vector<FreeWord> witnesses;
};

/// The derivation Lambda^s L -> Lambda^{s+1} L extending alpha1:
/// e_{i_1} ^ ... ^ e_{i_s} -> sum_j (-1)^{j-1} e_{i_1} ^ ... ^ alpha1(e_{i_j}) ^ ... ^ e_{i_s}.
inline IntegerMatrix alpha_s_wedge(const AlphaData& data, std::size_t s) {
    const std::size_t n = data.rank;
    if (s > n) throw usage_error("alpha_s_wedge: degree exceeds rank");
    const auto src = subsets(n, s);
    IntegerMatrix out(binomial(n, s + 1), src.size());
    if (s == 0 || s == n) return out;
    const auto pairs = subsets(n, 2);
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Subset& basis = src[c];
        for (std::size_t j = 0; j < s; ++j) {
            const int pos_sign = j % 2 == 0 ? 1 : -1;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                const Integer& coeff = data.alpha1_wedge(p, basis[j]);
                if (coeff == 0) continue;
                Subset t(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(j));
                t.push_back(pairs[p][0]);
                t.push_back(pairs[p][1]);
                t.insert(t.end(), basis.begin() + static_cast<std::ptrdiff_t>(j + 1), basis.end());
                const int sign = sort_with_sign(t);
                if (sign == 0) continue;
                out(subset_index(n, t), c) += pos_sign * sign * coeff;
            }
        }
    }
    return out;
}

/// Builds delta from the lift f of t^{-1}: delta(e_i) is the class of
/// f^m(x_i) x_i^{-1} in Gamma_2 / Gamma_3.
inline AlphaData compute_alpha(const CyclicAction& a, const AlphaOptions& opts = {}) {
    if (opts.sign != 1 && opts.sign != -1) throw usage_error("compute_alpha: sign must be +1 or -1");
    const std::size_t n = a.rank();
    const FreeEndomorphism f = canonical_lift(a, opts.order);
    if (!(f.abelianization() == a.inverse_matrix())) throw internal_error("compute_alpha: lift does not abelianize to A^{-1}");

    AlphaData data;
    data.rank = n;
    data.sign = opts.sign;
    std::vector<IntegerVector> cols;
    for (std::size_t i = 0; i < n; ++i) {
        const FreeWord x = FreeWord::generator(n, i);
        FreeWord w = word_multiply(endo_iterate_apply(f, a.modulus(), x, opts.word_cap), word_invert(x));
        cols.push_back(lcs_class(w));
        data.witnesses.push_back(std::move(w));
    }
    data.delta = IntegerMatrix::from_columns(binomial(n, 2), cols);
    data.alpha1_wedge = data.delta;
    data.alpha1_wedge *= Integer(opts.sign);

    const IntegerMatrix l2 = exterior_power_matrix(a.matrix(), 2);
    if (!(l2 * data.alpha1_wedge == data.alpha1_wedge * a.matrix()))
        throw internal_error("compute_alpha: alpha_1 is not equivariant");
    return data;
}

/// hom(L, Lambda^2 L) with t acting by phi -> Lambda^2 A phi A^{-1}.
inline CyclicAction alpha_hom_lattice(const CyclicAction& a) {
    return hom_lattice(a, make_action(a.modulus(), exterior_power_matrix(a.matrix(), 2), "L2(" + a.label() + ")"));
}

/// True iff alpha_1 is not a norm in hom(L, Lambda^2 L), i.e. its class in
/// H^0^(G; hom(L, Lambda^2 L)) is nonzero.
inline bool obstruction_nonzero(const CyclicAction& a, const AlphaData& data) {
    const CyclicAction h = alpha_hom_lattice(a);
    const IntegerVector v = flatten_hom(data.alpha1_wedge);
    const NormOperators ops = operators(h);
    if (!is_zero_vector(ops.aug * v)) throw internal_error("obstruction_nonzero: alpha_1 is not invariant");
    return !solve_integral(ops.norm, v).has_value();
}

inline bool obstruction_nonzero(const CyclicAction& a, const AlphaOptions& opts = {}) {
    return obstruction_nonzero(a, compute_alpha(a, opts));
}

/// Lambda^2 L^dual (x) L, coordinates I * n + k for wedge index I and basis vector e_k.
inline IntegerMatrix witness_action(const CyclicAction& a) {
    return kronecker(exterior_power_matrix(a.inverse_matrix().transpose(), 2), a.matrix());
}

/// Basis of the invariant witnesses.
inline IntegerMatrix invariant_witnesses(const CyclicAction& a) {
    const IntegerMatrix act = witness_action(a);
    return kernel_basis(act - IntegerMatrix::identity(act.rows()));
}

/// <alpha_1, w> mod m for an invariant witness w; a nonzero value certifies [alpha_1] != 0.
inline Integer pairing_value(const CyclicAction& a, const AlphaData& data, const IntegerVector& witness) {
    const std::size_t n = a.rank();
    const std::size_t wedge_dim = binomial(n, 2);
    if (witness.size() != wedge_dim * n) throw usage_error("pairing_value: witness has wrong length");
    if (!(witness_action(a) * witness == witness)) throw contract_violation("pairing_value: witness is not G-invariant");
    Integer value = 0;
    for (std::size_t i = 0; i < wedge_dim; ++i)
        for (std::size_t k = 0; k < n; ++k) value += witness[i * n + k] * data.alpha1_wedge(i, k);
    return mod_floor(value, Integer(a.modulus()));
}

/// (e1^ ^ e2^) (x) (e1 + e2 + 2 e3) - (e1^ ^ e3^) (x) e3 + (e2^ ^ e3^) (x) (e2 + e3).
inline IntegerVector paper_example_3_witness() { return {1, 1, 2, 0, 0, -1, 0, 1, 1}; }

} // namespace latcoh
