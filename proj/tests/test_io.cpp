#include "latcoh/report.hpp"

#include <gtest/gtest.h>

using namespace latcoh;

namespace {

const std::string samples = LATCOH_SAMPLES_DIR;

} // namespace

TEST(SpecJson, ExplicitMatrix) {
    const LatticeSpec s = parse_spec_json(R"({"m": 4, "matrix": [[0,-1],[1,0]], "label": "rot"})");
    const CyclicAction a = resolve_spec(s);
    EXPECT_EQ(a.matrix(), gauss_action().matrix());
    EXPECT_EQ(a.label(), "rot");
}

TEST(SpecJson, BigEntriesAsStrings) {
    const LatticeSpec s = parse_spec_json(R"({"m": 1, "matrix": [["1", "123456789012345678901234567890"], [0, "1"]]})");
    EXPECT_EQ(s.matrix->operator()(0, 1), Integer("123456789012345678901234567890"));
    // Unipotent, so not of finite order.
    EXPECT_THROW(resolve_spec(s), usage_error);
}

TEST(SpecJson, Builtin) {
    const CyclicAction a = resolve_spec(parse_spec_json(R"({"builtin": "cyclotomic:3:1"})"));
    EXPECT_EQ(a.matrix(), cyclotomic_lattice(3, 1).matrix());
}

TEST(SpecJson, Rejections) {
    EXPECT_THROW(parse_spec_json("{"), usage_error);
    EXPECT_THROW(parse_spec_json(R"({"m": 4})"), usage_error);
    EXPECT_THROW(parse_spec_json(R"({"m": 4, "matrix": [[1]], "builtin": "sign"})"), usage_error);
    EXPECT_THROW(parse_spec_json(R"({"builtin": "sign", "m": 2})"), usage_error);
    EXPECT_THROW(parse_spec_json(R"({"m": 4, "matrix": [[1, 0]]})"), usage_error);
    EXPECT_THROW(parse_spec_json(R"({"m": 4, "matrix": [[1.5]]})"), usage_error);
    EXPECT_THROW(parse_spec_json(R"({"m": 4, "matrix": [[1]], "colour": 1})"), usage_error);
    EXPECT_THROW(resolve_spec(parse_spec_json(R"({"m": 4, "matrix": [[2]]})")), usage_error);
}

TEST(Builtins, NamesAndArguments) {
    EXPECT_EQ(builtin_action("paper3").matrix(), paper_example_3().matrix());
    EXPECT_EQ(builtin_action("paper6").matrix(), paper_example_6().matrix());
    EXPECT_EQ(builtin_action("sign").matrix(), sign_action().matrix());
    EXPECT_EQ(builtin_action("gauss").matrix(), gauss_action().matrix());
    EXPECT_EQ(builtin_action("syzygy:6:2").rank(), 4u);
    EXPECT_EQ(builtin_action("permutation:12:3").rank(), 4u);
    EXPECT_THROW(builtin_action("cyclotomic:4:1"), usage_error);
    EXPECT_THROW(builtin_action("cyclotomic:3"), usage_error);
    EXPECT_THROW(builtin_action("syzygy:x:1"), usage_error);
    EXPECT_THROW(builtin_action("unknown"), usage_error);
}

TEST(SpecToml, SameKeysAsJson) {
    const LatticeSpec t = parse_spec_toml("# comment\nm = 4\nmatrix = [[0, -1],\n  [1, 0],]\nlabel = \"rot\" # trailing\n");
    const LatticeSpec j = parse_spec_json(R"({"m": 4, "matrix": [[0,-1],[1,0]], "label": "rot"})");
    EXPECT_EQ(*t.m, *j.m);
    EXPECT_EQ(*t.matrix, *j.matrix);
    EXPECT_EQ(t.label, j.label);
    EXPECT_EQ(resolve_spec(parse_spec_toml("builtin = \"paper3\"")).matrix(), paper_example_3().matrix());
}

TEST(SpecToml, Rejections) {
    EXPECT_THROW(parse_spec_toml("[table]\nm = 4"), usage_error);
    EXPECT_THROW(parse_spec_toml("m = 4\nm = 5"), usage_error);
    EXPECT_THROW(parse_spec_toml("m = 4.5"), usage_error);
    EXPECT_THROW(parse_spec_toml("m = 4\nmatrix = [[1]"), usage_error);
    EXPECT_THROW(parse_spec_toml("label = \"open"), usage_error);
}

TEST(SpecFiles, Samples) {
    const CyclicAction j = resolve_spec(load_spec_file(samples + "/paper3.json"));
    const CyclicAction t = resolve_spec(load_spec_file(samples + "/paper3.toml"));
    EXPECT_EQ(j.matrix(), paper_example_3().matrix());
    EXPECT_EQ(t.matrix(), paper_example_3().matrix());
    EXPECT_EQ(resolve_spec(load_spec_file(samples + "/rotation.toml")).matrix(), gauss_action().matrix());
    EXPECT_EQ(resolve_spec(load_spec_file(samples + "/paper6.json")).label(), "counterexample");
    EXPECT_THROW(resolve_spec(load_spec_file(samples + "/invalid_order.json")), usage_error);
    EXPECT_THROW(load_spec_file(samples + "/does_not_exist.json"), usage_error);
}

TEST(SpecFiles, RoundTripThroughJson) {
    const CyclicAction a = paper_example_6();
    const CyclicAction b = resolve_spec(spec_from_json(action_to_json(a)));
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_EQ(a.modulus(), b.modulus());
    EXPECT_EQ(a.label(), b.label());
}

TEST(Digest, KnownVectorAndStability) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    const CyclicAction a = paper_example_3();
    EXPECT_EQ(input_digest(a), input_digest(a.with_label("renamed")));
    EXPECT_NE(input_digest(a), input_digest(paper_example_6()));
    EXPECT_EQ(canonical_serialization(a), R"({"m":4,"matrix":[[0,1,0],[-1,0,1],[0,0,1]]})");
}

TEST(Reports, VerdictsMatchComputation) {
    const Json collapse = collapse_payload(d2(paper_example_6()));
    EXPECT_FALSE(collapse["verdict"].get<bool>());
    EXPECT_FALSE(collapse["witnesses"].empty());

    const Json euler = euler_payload(build_e2(sign_action()), 1);
    EXPECT_EQ(euler["lhs"], 4);
    EXPECT_TRUE(euler["verdict"].get<bool>());

    const Json tate = tate_payload(sign_action(), 1);
    EXPECT_TRUE(tate["verdict"].get<bool>());
    EXPECT_EQ(tate["cells"][3]["text"], "Z/2");

    const Json tate_nf = tate_payload(paper_example_3(), 3);
    EXPECT_TRUE(tate_nf["verdict"].is_null());

    const Json alpha = alpha_payload(paper_example_3(), {});
    EXPECT_TRUE(alpha["obstruction_nonzero"].get<bool>());
    EXPECT_EQ(alpha["delta"][2]["terms"][0]["coefficient"], -1);
}

TEST(Reports, StableUnderRerun) {
    const CyclicAction a = paper_example_6();
    const E2Page p1 = build_e2(a), p2 = build_e2(a);
    EXPECT_EQ(d2_payload(p1, d2(p1, compute_alpha(a))).dump(), d2_payload(p2, d2(p2, compute_alpha(a))).dump());
}

TEST(Reports, RationalFormatting) {
    EXPECT_EQ(rational_to_json(Rational(1, 2)), "1/2");
    EXPECT_EQ(rational_to_json(Rational(6, 2)), 3);
    EXPECT_EQ(structure_to_json(AbelianGroupStructure{1, {2}})["text"], "Z + Z/2");
}
