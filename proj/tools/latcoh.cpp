#include "latcoh/latcoh.hpp"
#include "latcoh/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using latcoh::Json;

enum Exit : int { ok = 0, verdict_false = 1, bad_input = 2, internal = 3 };

struct InputOptions {
    std::string input;
    std::string builtin;
    bool json = false;
    std::size_t word_cap = 0;
};

struct Loaded {
    latcoh::CyclicAction action;
    Json echo;
};

std::size_t effective_word_cap(const InputOptions& in) {
    if (in.word_cap != 0) return in.word_cap;
    if (const char* env = std::getenv("LATCOH_WORD_CAP"); env && *env) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw latcoh::usage_error(std::string("LATCOH_WORD_CAP must be a positive integer, got '") + env + "'");
    }
    return latcoh::default_word_cap;
}

Loaded load(const InputOptions& in) {
    if (in.input.empty() == in.builtin.empty()) throw latcoh::usage_error("give exactly one of --input FILE or --builtin NAME");
    latcoh::LatticeSpec spec;
    Json echo;
    if (!in.builtin.empty()) {
        spec.builtin = in.builtin;
        echo = {{"source", "builtin"}, {"name", in.builtin}};
    } else {
        spec = latcoh::load_spec_file(in.input);
        echo = {{"source", "file"}, {"path", in.input}};
    }
    latcoh::CyclicAction a = latcoh::resolve_spec(spec);
    echo["lattice"] = latcoh::action_to_json(a);
    return {std::move(a), std::move(echo)};
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* file = cmd->add_option("--input", in.input, "Lattice spec file (JSON or TOML)");
    auto* builtin = cmd->add_option("--builtin", in.builtin,
                                    "Builtin lattice: paper3, paper6, sign, gauss, cyclotomic:p:r, syzygy:m:d, permutation:m:h");
    file->excludes(builtin);
    cmd->add_flag("--json", in.json, "Emit a JSON report");
    cmd->add_option("--word-cap", in.word_cap, "Free-word length cap (default 1000000, or LATCOH_WORD_CAP)")
        ->check(CLI::PositiveNumber);
}

std::string header(const latcoh::CyclicAction& a, const std::string& digest) {
    return "lattice " + a.label() + " (m = " + std::to_string(a.modulus()) + ", n = " + std::to_string(a.rank()) +
           ")  " + digest + "\n";
}

std::string verdict_word(const Json& v) { return v.get<bool>() ? "yes" : "no"; }

// Pads a string to a fixed column width.
std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

void render_tate(const Json& r) {
    std::cout << "  j   " << pad("H^0", 20) << "H^1\n";
    const auto& cells = r["cells"];
    for (std::size_t k = 0; k + 1 < cells.size(); k += 2)
        std::cout << "  " << pad(std::to_string(cells[k]["j"].get<std::size_t>()), 4)
                  << pad(cells[k]["text"].get<std::string>(), 20) << cells[k + 1]["text"].get<std::string>() << "\n";
    if (!r["free_outside_origin"].get<bool>()) {
        std::cout << "not free outside the origin: no vanishing claim\n";
        return;
    }
    if (r["violations"].empty()) {
        std::cout << "free outside the origin: all cells with i + j odd vanish\n";
        return;
    }
    std::cout << "free outside the origin: VIOLATION at";
    for (const auto& v : r["violations"]) std::cout << " (i=" << v["i"] << ", j=" << v["j"] << ")";
    std::cout << "\n";
}

void render_alpha(const Json& r) {
    for (const auto& d : r["delta"]) {
        std::string rhs;
        for (const auto& t : d["terms"]) {
            const std::string c = t["coefficient"].dump();
            const std::string w = "e" + t["wedge"][0].dump() + "^e" + t["wedge"][1].dump();
            const bool neg = !c.empty() && c[0] == '-';
            const std::string mag = neg ? c.substr(1) : c;
            if (rhs.empty()) rhs = neg ? "-" : "";
            else rhs += neg ? " - " : " + ";
            rhs += (mag == "1" ? "" : mag + " ") + w;
        }
        std::cout << "  delta(e" << d["basis"] << ") = " << (rhs.empty() ? "0" : rhs) << "\n";
    }
    std::cout << "alpha_1 = " << r["sign"].get<int>() << " * delta (lift order " << r["lift_order"].get<std::string>()
              << ")\n";
    std::cout << (r["obstruction_nonzero"].get<bool>() ? "[alpha_1] != 0" : "[alpha_1] = 0") << "\n";
}

void render_d2(const Json& r) {
    for (const auto& b : r["blocks"]) {
        std::cout << "  d2: E2^{" << b["r"] << "," << b["s"].get<std::size_t>() + 1 << "} " << b["source"]["text"].get<std::string>()
                  << " -> E2^{" << b["r"].get<int>() + 2 << "," << b["s"] << "} " << b["target"]["text"].get<std::string>()
                  << (b["zero"].get<bool>() ? "  zero" : "  NONZERO " + b["matrix"].dump()) << "\n";
    }
    std::cout << "all d2 zero: " << verdict_word(r["all_zero"]) << "\n";
    std::cout << "d2 o d2 = 0: " << verdict_word(r["squares_to_zero"]) << "\n";
}

void render_witnesses(const Json& ws) {
    for (const auto& w : ws)
        std::cout << "  witness at r = " << w["r"] << ", s = " << w["s"] << " (source row j = " << w["source_row"]
                  << ", generator " << w["column"] << ")\n";
}

void render_e2(const Json& r) {
    const int imax = r["i_max"].get<int>();
    const auto rows = r["rows"].get<std::size_t>();
    const bool has_e3 = !r["cells"].empty() && r["cells"][0].contains("e3");
    for (const char* which : {"E2", "E3"}) {
        const bool e3 = std::string(which) == "E3";
        if (e3 && !has_e3) break;
        std::cout << which << " page (rows j, columns i)\n      ";
        for (int i = 0; i <= imax; ++i) std::cout << pad("i=" + std::to_string(i), 14);
        std::cout << "\n";
        for (std::size_t j = rows; j-- > 0;) {
            std::cout << "  " << pad("j=" + std::to_string(j), 4);
            for (int i = 0; i <= imax; ++i) {
                const auto& c = r["cells"][j * static_cast<std::size_t>(imax + 1) + static_cast<std::size_t>(i)];
                std::cout << pad((e3 ? c["e3"] : c)["text"].get<std::string>(), 14);
            }
            std::cout << "\n";
        }
    }
}

int emit(const InputOptions& in, const Json& report, const std::function<void(const Json&)>& human,
         const std::string& heading = {}) {
    const Json& result = report["result"];
    int code = Exit::ok;
    if (result.contains("verdict") && result["verdict"].is_boolean() && !result["verdict"].get<bool>()) code = Exit::verdict_false;
    if (in.json) {
        Json out = report;
        out["exit_status"] = code;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << heading;
        human(result);
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of cyclic group actions on lattices and the d2 differential of the associated extension"};
    app.require_subcommand(1);

    InputOptions in;
    std::size_t jmax = 0;
    int imax = 4;
    int k = 0;
    std::string order = "ascending";
    bool flip_sign = false;
    bool corrupt = false;
    std::vector<int> only;

    auto* tate_cmd = app.add_subcommand("tate", "Tate cohomology table of the exterior powers of the dual");
    add_input_options(tate_cmd, in);
    tate_cmd->add_option("--jmax", jmax, "Largest exterior degree (default n)");

    auto* alpha_cmd = app.add_subcommand("alpha1", "delta, alpha_1 and the obstruction class");
    auto* d2_cmd = app.add_subcommand("d2", "Matrices of d2 in columns r = 0, 1, 2");
    auto* collapse_cmd = app.add_subcommand("collapse", "Exit 0 iff every d2 vanishes");
    for (auto* cmd : {alpha_cmd, d2_cmd, collapse_cmd}) {
        add_input_options(cmd, in);
        cmd->add_option("--order", order, "Letter order of the lifted automorphism")
            ->check(CLI::IsMember({"ascending", "descending"}));
    }

    auto* e2_cmd = app.add_subcommand("e2", "E2 page, and E3 after d2");
    add_input_options(e2_cmd, in);
    e2_cmd->add_option("--imax", imax, "Largest column i (at least 2)")->check(CLI::Range(2, 64));

    auto* euler_cmd = app.add_subcommand("euler", "Order ratio of E2 against the Euler characteristic");
    add_input_options(euler_cmd, in);
    euler_cmd->add_option("--k", k, "Diagonal index, 2k > n (default: smallest such k)");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Run every acceptance check");
    verify_cmd->add_flag("--json", in.json, "Emit a JSON report");
    verify_cmd->add_option("--only", only, "Restrict to these check ids");
    verify_cmd->add_flag("--flip-sign", flip_sign, "Use alpha_1 = +delta")->group("");
    verify_cmd->add_flag("--corrupt-builtin", corrupt, "Replace the 3-dimensional builtin by a wrong matrix")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::bad_input;
    }

    try {
        if (verify_cmd->parsed()) {
            latcoh::VerifyOptions vopts;
            vopts.sign = flip_sign ? 1 : -1;
            vopts.corrupt_builtin = corrupt;
            vopts.only = only;
            const auto results = latcoh::verify_paper(vopts);
            Json echo{{"flip_sign", flip_sign}, {"corrupt_builtin", corrupt}, {"only", only}};
            return emit(in, latcoh::make_report("verify-paper", echo, "", latcoh::verify_payload(results)),
                        [&](const Json&) {
                            for (const auto& r : results) std::cout << latcoh::format_check(r) << "\n";
                        });
        }

        const Loaded loaded = load(in);
        const latcoh::CyclicAction& a = loaded.action;
        const std::string digest = latcoh::input_digest(a);
        latcoh::AlphaOptions aopts;
        aopts.order = order == "descending" ? latcoh::LiftOrder::descending : latcoh::LiftOrder::ascending;
        aopts.word_cap = effective_word_cap(in);
        const std::string head = header(a, digest);

        if (tate_cmd->parsed()) {
            const bool jmax_set = tate_cmd->count("--jmax") > 0;
            if (jmax_set && jmax > a.rank()) throw latcoh::usage_error("--jmax exceeds the rank " + std::to_string(a.rank()));
            const Json r = latcoh::tate_payload(a, jmax_set ? jmax : a.rank());
            return emit(in, latcoh::make_report("tate", loaded.echo, digest, r), render_tate, head);
        }
        if (alpha_cmd->parsed()) {
            const Json r = latcoh::alpha_payload(a, aopts);
            // A zero class is a valid answer, not a failed verdict.
            Json shown = r;
            shown.erase("verdict");
            return emit(in, latcoh::make_report("alpha1", loaded.echo, digest, shown), render_alpha, head);
        }
        if (d2_cmd->parsed() || collapse_cmd->parsed()) {
            const latcoh::E2Page page = latcoh::build_e2(a);
            const latcoh::DifferentialReport diff = latcoh::d2(page, latcoh::compute_alpha(a, aopts));
            if (d2_cmd->parsed())
                return emit(in, latcoh::make_report("d2", loaded.echo, digest, latcoh::d2_payload(page, diff)), render_d2, head);
            return emit(in, latcoh::make_report("collapse", loaded.echo, digest, latcoh::collapse_payload(diff)),
                        [](const Json& r) {
                            std::cout << "collapses at d2: " << verdict_word(r["collapses_at_d2"]) << "\n";
                            render_witnesses(r["witnesses"]);
                        },
                        head);
        }
        if (e2_cmd->parsed()) {
            const latcoh::E2Page page = latcoh::build_e2(a, imax);
            const latcoh::DifferentialReport diff = latcoh::d2(page, latcoh::compute_alpha(a, aopts));
            const latcoh::E3Page e3 = latcoh::build_e3(page, diff);
            return emit(in, latcoh::make_report("e2", loaded.echo, digest, latcoh::e2_payload(page, &e3)), render_e2, head);
        }
        if (euler_cmd->parsed()) {
            const int kk = euler_cmd->count("--k") ? k : static_cast<int>(a.rank() / 2 + 1);
            const Json r = latcoh::euler_payload(latcoh::build_e2(a), kk);
            return emit(in, latcoh::make_report("euler", loaded.echo, digest, r), [](const Json& res) {
                const std::string lhs = res["lhs"].is_string() ? res["lhs"].get<std::string>() : res["lhs"].dump();
                const std::string rhs = res["rhs"].is_string() ? res["rhs"].get<std::string>() : res["rhs"].dump();
                std::cout << "k = " << res["k"] << ": E2 order ratio " << lhs << (res["equal"].get<bool>() ? " = " : " != ")
                          << rhs << " Euler characteristic\n";
            }, head);
        }
    } catch (const latcoh::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const latcoh::contract_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const latcoh::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Exit::internal;
    }
    return Exit::ok;
}
