#pragma once

#include "latcoh/lattice.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace latcoh {

/// Either an explicit lattice (m, matrix, optional label) or a builtin name.
struct LatticeSpec {
    std::optional<std::string> builtin;
    std::optional<std::int64_t> m;
    std::optional<IntegerMatrix> matrix;
    std::string label;
};

namespace detail {

inline std::vector<std::int64_t> parse_builtin_args(const std::string& name, const std::string& prefix, std::size_t count) {
    std::vector<std::int64_t> args;
    std::string rest = name.substr(prefix.size());
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const std::size_t next = rest.find(':', pos);
        const std::string part = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw usage_error("builtin '" + name + "': argument '" + part + "' is not an integer");
        args.push_back(value);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (args.size() != count)
        throw usage_error("builtin '" + name + "' expects " + std::to_string(count) + " integer arguments");
    return args;
}

} // namespace detail

/// paper3, paper6, sign, gauss, cyclotomic:p:r, syzygy:m:d, permutation:m:h.
inline CyclicAction builtin_action(const std::string& name) {
    if (name == "paper3") return paper_example_3();
    if (name == "paper6") return paper_example_6();
    if (name == "sign") return sign_action();
    if (name == "gauss") return gauss_action();
    if (name.starts_with("cyclotomic:")) {
        const auto a = detail::parse_builtin_args(name, "cyclotomic:", 2);
        if (a[0] < 2 || a[1] < 1 || a[1] > 8) throw usage_error("builtin '" + name + "': need p >= 2, 1 <= r <= 8");
        return cyclotomic_lattice(a[0], a[1]);
    }
    if (name.starts_with("syzygy:")) {
        const auto a = detail::parse_builtin_args(name, "syzygy:", 2);
        if (a[0] > 64) throw usage_error("builtin '" + name + "': m above 64 is not supported");
        return syzygy_lattice(a[0], a[1]);
    }
    if (name.starts_with("permutation:")) {
        const auto a = detail::parse_builtin_args(name, "permutation:", 2);
        if (a[0] > 64) throw usage_error("builtin '" + name + "': m above 64 is not supported");
        return permutation_lattice(a[0], a[1]);
    }
    throw usage_error("unknown builtin '" + name + "'");
}

inline Integer integer_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), ::isdigit))
            throw usage_error("matrix entry '" + s + "' is not an integer");
        return Integer(s);
    }
    throw usage_error("matrix entries must be integers");
}

inline nlohmann::json integer_to_json(const Integer& x) {
    if (auto small = to_int64(x)) return *small;
    return x.str();
}

inline IntegerMatrix matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array()) throw usage_error("'matrix' must be an array of rows");
    const std::size_t n = rows.size();
    IntegerMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw usage_error("'matrix' must be square: row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < n; ++c) out(r, c) = integer_from_json(rows[r][c]);
    }
    return out;
}

inline nlohmann::json matrix_to_json(const IntegerMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline LatticeSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw usage_error("lattice spec must be an object");
    for (const auto& [key, _] : j.items())
        if (key != "m" && key != "matrix" && key != "label" && key != "builtin")
            throw usage_error("lattice spec: unknown key '" + key + "'");
    LatticeSpec spec;
    if (j.contains("builtin")) {
        if (!j["builtin"].is_string()) throw usage_error("'builtin' must be a string");
        spec.builtin = j["builtin"].get<std::string>();
    }
    if (j.contains("m")) {
        if (!j["m"].is_number_integer()) throw usage_error("'m' must be an integer");
        spec.m = j["m"].get<std::int64_t>();
    }
    if (j.contains("matrix")) spec.matrix = matrix_from_json(j["matrix"]);
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw usage_error("'label' must be a string");
        spec.label = j["label"].get<std::string>();
    }
    if (spec.builtin.has_value() == spec.matrix.has_value())
        throw usage_error("lattice spec needs exactly one of 'matrix' or 'builtin'");
    if (spec.matrix && !spec.m) throw usage_error("lattice spec with 'matrix' also needs 'm'");
    if (spec.builtin && spec.m) throw usage_error("lattice spec: 'm' is not allowed together with 'builtin'");
    return spec;
}

inline LatticeSpec parse_spec_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw usage_error(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

namespace detail {

/// Reader for the TOML subset used by lattice specs: top-level `key = value`
/// lines with integers, basic strings and (nested, possibly multi-line)
/// arrays of integers. Values are converted to JSON so both formats share
/// one validator.
class TomlReader {
  public:
    explicit TomlReader(std::string text) : text_(std::move(text)) {}

    nlohmann::json parse() {
        nlohmann::json out = nlohmann::json::object();
        for (;;) {
            skip_space_and_comments(true);
            if (pos_ >= text_.size()) break;
            if (text_[pos_] == '[') fail("tables are not supported");
            const std::string key = parse_key();
            skip_space_and_comments(false);
            expect('=');
            skip_space_and_comments(false);
            if (out.contains(key)) fail("duplicate key '" + key + "'");
            out[key] = parse_value();
            skip_space_and_comments(false);
            if (pos_ < text_.size() && text_[pos_] != '\n') fail("expected end of line after value");
        }
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
            if (text_[i] == '\n') ++line;
        throw usage_error("invalid TOML (line " + std::to_string(line) + "): " + what);
    }

    void skip_space_and_comments(bool newlines) {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string parse_key() {
        if (pos_ < text_.size() && text_[pos_] == '"') return parse_string();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                       text_[pos_] == '-'))
            ++pos_;
        if (start == pos_) fail("expected a key");
        return text_.substr(start, pos_ - start);
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_++];
            if (c == '\n') fail("unterminated string");
            if (c == '\\') {
                if (pos_ >= text_.size()) fail("unterminated escape");
                const char e = text_[pos_++];
                switch (e) {
                case '"': c = '"'; break;
                case '\\': c = '\\'; break;
                case 'n': c = '\n'; break;
                case 't': c = '\t'; break;
                default: fail(std::string("unsupported escape \\") + e);
                }
            }
            out += c;
        }
        expect('"');
        return out;
    }

    nlohmann::json parse_value() {
        if (pos_ >= text_.size()) fail("expected a value");
        const char c = text_[pos_];
        if (c == '"') return parse_string();
        if (c == '[') {
            ++pos_;
            nlohmann::json arr = nlohmann::json::array();
            for (;;) {
                skip_space_and_comments(true);
                if (pos_ < text_.size() && text_[pos_] == ']') {
                    ++pos_;
                    return arr;
                }
                arr.push_back(parse_value());
                skip_space_and_comments(true);
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                skip_space_and_comments(true);
                expect(']');
                return arr;
            }
        }
        const std::size_t start = pos_;
        if (c == '+' || c == '-') ++pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        std::erase(digits, '_');
        if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
        if (digits.empty() || digits == "-") fail("expected an integer, string or array");
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            fail("only integer, string and array values are supported");
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return value;
        return digits; // out of int64 range; kept exact as a decimal string
    }

    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline LatticeSpec parse_spec_toml(const std::string& text) { return spec_from_json(detail::TomlReader(text).parse()); }

/// Reads a spec file. `.toml` files are parsed as TOML, everything else as
/// JSON with a TOML fallback when the content does not start like JSON.
inline LatticeSpec load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open input file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.extension() == ".toml") return parse_spec_toml(text);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] != '{') return parse_spec_toml(text);
    return parse_spec_json(text);
}

inline CyclicAction resolve_spec(const LatticeSpec& spec) {
    if (spec.builtin) {
        CyclicAction a = builtin_action(*spec.builtin);
        return spec.label.empty() ? a : a.with_label(spec.label);
    }
    return make_action(*spec.m, *spec.matrix, spec.label.empty() ? std::string("input") : spec.label);
}

/// {"m", "matrix", "label"} as shared by spec files and reports.
inline nlohmann::json action_to_json(const CyclicAction& a) {
    return {{"m", a.modulus()}, {"matrix", matrix_to_json(a.matrix())}, {"label", a.label()}};
}

} // namespace latcoh
