#pragma once

#include "latcoh/exterior.hpp"
#include "latcoh/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latcoh {

/// A letter x_g^{+1} or x_g^{-1}; generators are indexed from 0.
struct Letter {
    std::size_t gen = 0;
    int exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on `rank` generators.
class FreeWord {
  public:
    FreeWord() = default;
    FreeWord(std::size_t rank, std::vector<Letter> letters) : rank_(rank) {
        for (const Letter& l : letters) push(l);
    }

    static FreeWord generator(std::size_t rank, std::size_t g, int exp = 1) { return FreeWord(rank, {{g, exp}}); }

    std::size_t rank() const { return rank_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    /// Appends a letter, cancelling against the last one when possible.
    void push(const Letter& l) {
        if (l.gen >= rank_) throw usage_error("free word: generator index " + std::to_string(l.gen) + " out of range");
        if (l.exp != 1 && l.exp != -1) throw usage_error("free word: letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) letters_.pop_back();
        else letters_.push_back(l);
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (const Letter& l : letters_) {
            out += "x" + std::to_string(l.gen + 1);
            if (l.exp < 0) out += "^-1";
        }
        return out;
    }

  private:
    std::size_t rank_ = 0;
    std::vector<Letter> letters_;
};

inline FreeWord word_reduce(const FreeWord& w) { return FreeWord(w.rank(), w.letters()); }

inline FreeWord word_multiply(const FreeWord& a, const FreeWord& b) {
    if (a.rank() != b.rank()) throw usage_error("word_multiply: words live in free groups of different rank");
    FreeWord out = a;
    for (const Letter& l : b.letters()) out.push(l);
    return out;
}

inline FreeWord word_invert(const FreeWord& w) {
    std::vector<Letter> inv;
    inv.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) inv.push_back({it->gen, -it->exp});
    return FreeWord(w.rank(), std::move(inv));
}

inline constexpr std::size_t default_word_cap = 1000000;

/// Endomorphism of F_n given by the images of the generators.
class FreeEndomorphism {
  public:
    explicit FreeEndomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
        for (const FreeWord& w : images_)
            if (w.rank() != images_.size()) throw usage_error("free endomorphism: image word has wrong rank");
    }

    std::size_t rank() const { return images_.size(); }
    const std::vector<FreeWord>& images() const { return images_; }

    /// Exponent-sum matrix: column i is the abelianized image of x_i.
    IntegerMatrix abelianization() const {
        const std::size_t n = rank();
        IntegerMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (const Letter& l : images_[i].letters()) out(l.gen, i) += l.exp;
        return out;
    }

    /// f(w), with a resource error once the result exceeds `cap` letters.
    FreeWord apply(const FreeWord& w, std::size_t cap = default_word_cap) const {
        if (w.rank() != rank()) throw usage_error("free endomorphism: word has wrong rank");
        std::vector<FreeWord> inverses;
        FreeWord out(rank(), {});
        for (const Letter& l : w.letters()) {
            const FreeWord& img = images_[l.gen];
            if (l.exp > 0) {
                for (const Letter& x : img.letters()) out.push(x);
            } else {
                for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push({it->gen, -it->exp});
            }
            if (out.length() > cap)
                throw resource_error("free word length cap of " + std::to_string(cap) + " letters exceeded");
        }
        return out;
    }

  private:
    std::vector<FreeWord> images_;
};

enum class LiftOrder { ascending, descending };

/// Lift of t^{-1}: x_i -> product of x_k^{c_k} over k, with c column i of A^{-1}.
inline FreeEndomorphism canonical_lift(const CyclicAction& a, LiftOrder order = LiftOrder::ascending) {
    const std::size_t n = a.rank();
    const IntegerMatrix& inv = a.inverse_matrix();
    std::vector<FreeWord> images;
    for (std::size_t i = 0; i < n; ++i) {
        FreeWord w(n, {});
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t k = order == LiftOrder::ascending ? step : n - 1 - step;
            const Integer& c = inv(k, i);
            const int exp = c < 0 ? -1 : 1;
            for (Integer e = abs(c); e > 0; --e) w.push({k, exp});
        }
        images.push_back(std::move(w));
    }
    return FreeEndomorphism(std::move(images));
}

inline FreeWord endo_iterate_apply(const FreeEndomorphism& f, std::int64_t k, const FreeWord& w,
                                   std::size_t cap = default_word_cap) {
    if (k < 0) throw usage_error("endo_iterate_apply: iteration count must be nonnegative");
    FreeWord out = w;
    for (std::int64_t i = 0; i < k; ++i) out = f.apply(out, cap);
    return out;
}

/// Image of a word in Z<<X_1..X_n>> modulo terms of degree three.
struct MagnusTruncation {
    IntegerVector linear;
    IntegerMatrix quadratic; // entry (i, j) is the coefficient of X_i X_j
};

inline MagnusTruncation magnus(const FreeWord& w) {
    const std::size_t n = w.rank();
    MagnusTruncation t{IntegerVector(n), IntegerMatrix(n, n)};
    // Right multiplication by (1 + X_g) or (1 - X_g + X_g^2).
    for (const Letter& l : w.letters()) {
        const std::size_t g = l.gen;
        if (l.exp > 0) {
            for (std::size_t i = 0; i < n; ++i) t.quadratic(i, g) += t.linear[i];
            t.linear[g] += 1;
        } else {
            t.quadratic(g, g) += 1;
            for (std::size_t i = 0; i < n; ++i) t.quadratic(i, g) -= t.linear[i];
            t.linear[g] -= 1;
        }
    }
    return t;
}

/// Class of w in Gamma_2 / Gamma_3 = Lambda^2 Z^n, with [x_i, x_j] -> e_i ^ e_j.
inline IntegerVector lcs_class(const FreeWord& w) {
    const MagnusTruncation t = magnus(w);
    if (!is_zero_vector(t.linear)) throw contract_violation("lcs_class: word is not in the commutator subgroup");
    const std::size_t n = w.rank();
    IntegerVector out;
    out.reserve(binomial(n, 2));
    for (const Subset& s : subsets(n, 2)) {
        if (t.quadratic(s[0], s[1]) != -t.quadratic(s[1], s[0]))
            throw internal_error("lcs_class: quadratic part of a commutator word is not antisymmetric");
        out.push_back(t.quadratic(s[0], s[1]));
    }
    return out;
}

} // namespace latcoh
