#pragma once

// JSON payloads for the command-line front end. Human-readable output is
// rendered from the same payloads, so both forms always agree on verdicts.

#include "latcoh/lhs.hpp"
#include "latcoh/spec_file.hpp"
#include "latcoh/verify.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <array>
#include <iomanip>
#include <sstream>
#include <string>

namespace latcoh {

using Json = nlohmann::json;

/// Hex SHA-256 of a byte string.
inline std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw internal_error("sha256_hex: digest failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

/// Canonical form: compact JSON of {"m", "matrix"} with sorted keys. The label
/// is excluded so renaming a lattice does not change its digest.
inline std::string canonical_serialization(const CyclicAction& a) {
    const Json j{{"m", a.modulus()}, {"matrix", matrix_to_json(a.matrix())}};
    return j.dump();
}

inline std::string input_digest(const CyclicAction& a) { return "sha256:" + sha256_hex(canonical_serialization(a)); }

inline Json rational_to_json(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return integer_to_json(num);
    return num.str() + "/" + den.str();
}

inline std::string rational_str(const Rational& q) {
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline Json structure_to_json(const AbelianGroupStructure& g) {
    Json torsion = Json::array();
    for (const Integer& t : g.torsion) torsion.push_back(integer_to_json(t));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.str()}};
}

inline Json cell_to_json(int i, std::size_t j, const AbelianGroupStructure& g) {
    Json out = structure_to_json(g);
    out["i"] = i;
    out["j"] = j;
    return out;
}

/// Ĥ^i(G; Lambda^j L^dual) for i in {0, 1}. Cells with i + j odd must vanish
/// when the action is free outside the origin; offending cells are listed.
inline Json tate_payload(const CyclicAction& a, std::size_t j_max) {
    const bool free = is_free_outside_origin(a);
    const CyclicAction d = dual(a);
    Json cells = Json::array();
    Json violations = Json::array();
    for (std::size_t j = 0; j <= j_max; ++j) {
        const CyclicAction coeff = exterior_power(d, j);
        const NormOperators ops = operators(coeff);
        for (int i = 0; i <= 1; ++i) {
            const AbelianGroupStructure g = tate(coeff, i, ops).structure();
            cells.push_back(cell_to_json(i, j, g));
            if (free && (i + static_cast<int>(j)) % 2 == 1 && !g.is_trivial()) violations.push_back({{"i", i}, {"j", j}});
        }
    }
    Json out{{"j_max", j_max}, {"free_outside_origin", free}, {"cells", cells}, {"violations", violations}};
    out["verdict"] = free ? Json(violations.empty()) : Json(nullptr);
    return out;
}

inline Json alpha_payload(const CyclicAction& a, const AlphaOptions& opts) {
    const AlphaData data = compute_alpha(a, opts);
    const std::size_t n = a.rank();
    const auto pairs = subsets(n, 2);
    Json delta = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json terms = Json::array();
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (data.delta(p, i) != 0)
                terms.push_back({{"coefficient", integer_to_json(data.delta(p, i))},
                                 {"wedge", {pairs[p][0] + 1, pairs[p][1] + 1}}});
        delta.push_back({{"basis", i + 1}, {"terms", terms}, {"witness_word", data.witnesses[i].str()}});
    }
    const bool nonzero = obstruction_nonzero(a, data);
    return {{"sign", data.sign},
            {"lift_order", opts.order == LiftOrder::ascending ? "ascending" : "descending"},
            {"delta", delta},
            {"delta_matrix", matrix_to_json(data.delta)},
            {"alpha1_matrix", matrix_to_json(data.alpha1_wedge)},
            {"obstruction_nonzero", nonzero},
            {"verdict", nonzero}};
}

inline Json d2_payload(const E2Page& page, const DifferentialReport& diff) {
    Json blocks = Json::array();
    for (const D2Block& b : diff.maps) {
        blocks.push_back({{"r", b.r},
                          {"s", b.s},
                          {"source", cell_to_json(b.r, b.s + 1, page.cell(b.r, b.s + 1).structure())},
                          {"target", cell_to_json(b.r + 2, b.s, page.cell(b.r + 2, b.s).structure())},
                          {"matrix", matrix_to_json(b.matrix)},
                          {"zero", b.matrix.is_zero()}});
    }
    Json witnesses = Json::array();
    for (const D2Witness& w : diff.witnesses)
        witnesses.push_back({{"r", w.r}, {"s", w.s}, {"source_row", w.s + 1}, {"column", w.column}});
    return {{"blocks", blocks},
            {"all_zero", diff.all_zero},
            {"squares_to_zero", diff.squares_to_zero},
            {"witnesses", witnesses}};
}

inline Json collapse_payload(const DifferentialReport& diff) {
    Json witnesses = Json::array();
    for (const D2Witness& w : diff.witnesses)
        witnesses.push_back({{"r", w.r}, {"s", w.s}, {"source_row", w.s + 1}, {"column", w.column}});
    return {{"collapses_at_d2", diff.all_zero}, {"witnesses", witnesses}, {"verdict", diff.all_zero}};
}

inline Json e2_payload(const E2Page& page, const E3Page* e3) {
    Json cells = Json::array();
    for (std::size_t j = 0; j < page.rows(); ++j)
        for (int i = 0; i <= page.i_max(); ++i) {
            Json c = cell_to_json(i, j, page.cell(i, j).structure());
            if (e3) c["e3"] = structure_to_json(e3->cell(i, j));
            cells.push_back(std::move(c));
        }
    return {{"i_max", page.i_max()}, {"rows", page.rows()}, {"cells", cells}};
}

inline Json euler_payload(const E2Page& page, int k) {
    const EulerRatio r = euler_ratio_check(page, k);
    return {{"k", k},
            {"lhs", rational_to_json(r.lhs)},
            {"rhs", rational_to_json(r.rhs)},
            {"equal", r.equal},
            {"verdict", r.equal}};
}

inline Json verify_payload(const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    bool all = true;
    for (const CheckResult& c : results) {
        checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all = all && c.passed;
    }
    return {{"checks", checks}, {"all_passed", all}, {"verdict", all}};
}

/// Envelope shared by every command.
inline Json make_report(const std::string& command, const Json& input, const std::string& digest, Json result) {
    Json out{{"command", command}, {"input", input}, {"result", std::move(result)}};
    out["digest"] = digest.empty() ? Json(nullptr) : Json(digest);
    return out;
}

} // namespace latcoh
