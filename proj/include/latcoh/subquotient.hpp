#pragma once

#include "latcoh/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcoh {

/// Presentation of a subquotient ker X / im Y of Z^ambient.
///
/// The numerator is held as a saturated basis K with an integral left inverse
/// P. Denominator generators are rewritten in K-coordinates and brought to
/// Smith form U * (P Y) * V = D; structure coordinates of a class are the
/// entries of U * P * v at positions whose invariant factor is not 1.
class SubquotientPresentation {
  public:
    SubquotientPresentation() = default;

    /// `numerator_basis` must be saturated with independent columns and every
    /// column of `denominator` must lie in its span.
    SubquotientPresentation(std::size_t ambient_rank, IntegerMatrix numerator_basis, IntegerMatrix denominator)
        : ambient_rank_(ambient_rank), numerator_(std::move(numerator_basis)), denominator_(std::move(denominator)) {
        if (numerator_.rows() != ambient_rank_ || denominator_.rows() != ambient_rank_)
            throw usage_error("subquotient: basis row count differs from ambient rank");
        left_inv_ = left_inverse(numerator_);
        const IntegerMatrix rel = left_inv_ * denominator_;
        if (!(numerator_ * rel == denominator_))
            throw contract_violation("subquotient: denominator is not contained in numerator");
        auto snf = smith_normal_form(rel);
        const std::size_t k = numerator_.cols();
        std::vector<Integer> d = snf.diagonal();
        for (std::size_t i = 0; i < k; ++i) {
            if (i < snf.rank) {
                if (d[i] != 1) {
                    torsion_index_.push_back(i);
                    structure_.torsion.push_back(d[i]);
                }
            } else {
                free_index_.push_back(i);
            }
        }
        structure_.free_rank = free_index_.size();
        // Only the rows of U P and the columns of K U^{-1} that carry a
        // nontrivial coordinate are kept.
        std::vector<std::size_t> used = torsion_index_;
        used.insert(used.end(), free_index_.begin(), free_index_.end());
        to_struct_ = snf.U.row_subset(used) * left_inv_;
        from_struct_ = numerator_ * snf.U_inv.col_subset(used);
    }

    /// As above, with numerator = ker(equations); membership is then tested by
    /// the equations instead of the basis.
    SubquotientPresentation(std::size_t ambient_rank, IntegerMatrix numerator_basis, IntegerMatrix denominator,
                            IntegerMatrix equations)
        : SubquotientPresentation(ambient_rank, std::move(numerator_basis), std::move(denominator)) {
        equations_ = std::move(equations);
    }

    std::size_t ambient_rank() const { return ambient_rank_; }
    const IntegerMatrix& numerator_basis() const { return numerator_; }
    const IntegerMatrix& denominator_basis() const { return denominator_; }
    const AbelianGroupStructure& structure() const { return structure_; }

    bool in_numerator(const IntegerVector& v) const {
        if (equations_) return is_zero_vector(*equations_ * v);
        return numerator_ * (left_inv_ * v) == v;
    }

    /// Structure coordinates of every column of `m`, without reduction.
    IntegerMatrix raw_coordinates(const IntegerMatrix& m) const { return to_struct_ * m; }

    /// Structure coordinates of v (torsion entries reduced to [0, t_i)).
    IntegerVector coordinates(const IntegerVector& v) const {
        if (v.size() != ambient_rank_) throw usage_error("coordinates: vector length differs from ambient rank");
        if (!in_numerator(v)) throw contract_violation("coordinates: vector is not in the numerator lattice");
        IntegerVector out = to_struct_ * v;
        for (std::size_t t = 0; t < torsion_index_.size(); ++t) out[t] = mod_floor(out[t], structure_.torsion[t]);
        return out;
    }

    /// Ambient representative of the class with the given structure coordinates.
    IntegerVector lift(const IntegerVector& coords) const {
        if (coords.size() != structure_.generator_count())
            throw usage_error("lift: coordinate count differs from generator count");
        return from_struct_ * coords;
    }

    /// True when v lies in the numerator and represents the zero class.
    bool is_zero_class(const IntegerVector& v) const { return is_zero_vector(coordinates(v)); }

  private:
    std::size_t ambient_rank_ = 0;
    IntegerMatrix numerator_;
    IntegerMatrix denominator_;
    IntegerMatrix left_inv_;
    std::optional<IntegerMatrix> equations_;
    IntegerMatrix to_struct_;
    IntegerMatrix from_struct_;
    std::vector<std::size_t> torsion_index_;
    std::vector<std::size_t> free_index_;
    AbelianGroupStructure structure_;
};

/// Reduce each row of a structure-coordinate matrix modulo its target modulus.
inline IntegerMatrix reduce_rows(IntegerMatrix m, const std::vector<Integer>& moduli) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (moduli[i] != 0)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j), moduli[i]);
    return m;
}

/// ker X / im Y inside Z^ambient_rank; requires X * Y = 0.
inline SubquotientPresentation subquotient(std::size_t ambient_rank, const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols() != ambient_rank || y.rows() != ambient_rank)
        throw usage_error("subquotient: operator shapes do not match the ambient rank");
    if (!(x * y).is_zero()) throw contract_violation("subquotient: X * Y != 0, so im Y is not inside ker X");
    return SubquotientPresentation(ambient_rank, kernel_basis(x), y, x);
}

/// Matrix, in structure coordinates, of the homomorphism src -> dst induced by phi.
inline IntegerMatrix induced_map(const IntegerMatrix& phi, const SubquotientPresentation& src,
                                 const SubquotientPresentation& dst) {
    if (phi.cols() != src.ambient_rank() || phi.rows() != dst.ambient_rank())
        throw usage_error("induced_map: map shape does not match the ambient ranks");
    const IntegerMatrix num_image = phi * src.numerator_basis();
    for (std::size_t j = 0; j < num_image.cols(); ++j)
        if (!dst.in_numerator(num_image.col(j)))
            throw contract_violation("induced_map: map does not preserve the numerator lattice");
    const auto moduli = dst.structure().moduli();
    const IntegerMatrix den_coords = reduce_rows(dst.raw_coordinates(phi * src.denominator_basis()), moduli);
    if (!den_coords.is_zero())
        throw contract_violation("induced_map: map does not send the denominator into the denominator");

    // Columns of from_struct are the lifts of the source generators.
    const std::size_t k = src.structure().generator_count();
    IntegerMatrix lifts(src.ambient_rank(), k);
    for (std::size_t j = 0; j < k; ++j) {
        IntegerVector e(k);
        e[j] = 1;
        const IntegerVector l = src.lift(e);
        for (std::size_t i = 0; i < l.size(); ++i) lifts(i, j) = l[i];
    }
    return reduce_rows(dst.raw_coordinates(phi * lifts), moduli);
}

/// Homology ker(out) / im(in) at a group with the given structure, where the
/// maps are given in structure coordinates of their source/target groups.
inline AbelianGroupStructure homology_at(const AbelianGroupStructure& middle, const IntegerMatrix& in,
                                         const IntegerMatrix& out, const AbelianGroupStructure& target) {
    const std::size_t k = middle.generator_count();
    if (in.rows() != k || out.cols() != k || out.rows() != target.generator_count())
        throw usage_error("homology_at: map shapes do not match the structures");
    // x with out * x in the relation lattice of the target.
    const auto tmod = target.moduli();
    std::vector<IntegerVector> tgt_rel;
    for (std::size_t i = 0; i < tmod.size(); ++i)
        if (tmod[i] != 0) {
            IntegerVector e(tmod.size());
            e[i] = tmod[i];
            tgt_rel.push_back(e);
        }
    IntegerMatrix combined = hstack(out, IntegerMatrix::from_columns(tmod.size(), tgt_rel));
    IntegerMatrix ker = kernel_basis(combined);
    IntegerMatrix cycles = lattice_basis(ker.row_range(0, k));

    const auto mmod = middle.moduli();
    std::vector<IntegerVector> rel;
    for (std::size_t i = 0; i < k; ++i)
        if (mmod[i] != 0) {
            IntegerVector e(k);
            e[i] = mmod[i];
            rel.push_back(e);
        }
    for (std::size_t j = 0; j < in.cols(); ++j) rel.push_back(in.col(j));
    IntegerMatrix rels = IntegerMatrix::from_columns(k, rel);

    // cycles is a basis but not necessarily saturated; solve each relation exactly.
    std::vector<IntegerVector> coords;
    for (std::size_t j = 0; j < rels.cols(); ++j) {
        auto c = solve_integral(cycles, rels.col(j));
        if (!c) throw contract_violation("homology_at: boundaries are not cycles");
        coords.push_back(*c);
    }
    IntegerMatrix rel_coords = IntegerMatrix::from_columns(cycles.cols(), coords);
    return cokernel_structure(rel_coords);
}

} // namespace latcoh
