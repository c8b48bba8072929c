#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"
#include "typespace/serialization.hpp"

using namespace typespace;
using namespace typespace::testing;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Serialization, FunctorRoundTripIsExact) {
  const auto corpus = corpus_functors();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto j = functor_to_json(corpus[i]);
    const auto back = functor_from_json(parse_json(dump(j)));
    EXPECT_EQ(dump(functor_to_json(back)), dump(j)) << corpus_name(i);
    EXPECT_EQ(back.level_sizes(), corpus[i].level_sizes());
    EXPECT_TRUE(validate_functor(back).pass) << corpus_name(i);
  }
}

TEST(Serialization, DumpIsStable) {
  const auto s = dump(Json{{"b", 1}, {"a", {1, 2}}});
  EXPECT_EQ(s, "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}

TEST(Serialization, MapRoundTrip) {
  const auto th = orbit_theory(load_structure("path4"), 3);
  const auto back = map_from_json(parse_json(dump(map_to_json(th.projection))));
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(back.component(n), th.projection.component(n));
  EXPECT_TRUE(simplicial_map_validate(back).pass);
  EXPECT_FALSE(back.augmentation().has_value());
}

TEST(Serialization, MapRoundTripKeepsAugmentation) {
  const auto pr = head_projection(builtin("dlo", 4), 2, 0);
  const auto back = map_from_json(parse_json(dump(map_to_json(pr))));
  ASSERT_TRUE(back.augmentation().has_value());
  EXPECT_EQ(back.augmentation()->component, pr.augmentation()->component);
  EXPECT_EQ(back.augmentation()->source_restrict, pr.augmentation()->source_restrict);
  EXPECT_EQ(dump(map_to_json(back)), dump(map_to_json(pr)));
}

TEST(Serialization, StructureRoundTrip) {
  for (const auto& name : structure_names()) {
    const auto M = load_structure(name);
    const auto back = structure_from_json(structure_to_json(M));
    EXPECT_EQ(back.domain, M.domain) << name;
    for (const auto& [r, rel] : M.relations) EXPECT_EQ(back.relations.at(r).tuples, rel.tuples) << name;
  }
}

TEST(Serialization, SyntaxErrorsCarryLineAndColumn) {
  const auto msg = error_of([] { parse_json("{\n  \"a\": 1,\n  \"b\" 2\n}", "f.json"); });
  EXPECT_NE(msg.find("f.json:3:"), std::string::npos) << msg;
}

TEST(Serialization, FieldErrorsNameThePath) {
  auto msg = error_of([] { structure_from_json(parse_json(R"({"domain": ["a", "a"]})")); });
  EXPECT_NE(msg.find("structure.domain[1]"), std::string::npos) << msg;
  msg = error_of([] {
    structure_from_json(parse_json(R"({"domain": ["a"], "relations": {"R": {"arity": 2, "tuples": [["a"]]}}})"));
  });
  EXPECT_NE(msg.find("structure.relations.R.tuples[0]"), std::string::npos) << msg;
  msg = error_of([] {
    structure_from_json(parse_json(R"({"domain": ["a"], "relations": {"R": {"arity": 1, "tuples": [["z"]]}}})"));
  });
  EXPECT_NE(msg.find("unknown point 'z'"), std::string::npos) << msg;
  msg = error_of([] { functor_from_json(parse_json(R"({"levels": []})")); });
  EXPECT_NE(msg.find("functor: missing field 'max_dim'"), std::string::npos) << msg;
}

TEST(Serialization, CorruptedActionRejected) {
  auto j = functor_to_json(builtin("equality", 3));
  j["action"]["forget_last"][1][0] = 99;
  EXPECT_THROW(functor_from_json(j), FormatError);
}

TEST(Serialization, BuiltinReferences) {
  const auto T = functor_ref_from_json(parse_json(R"({"builtin": "dlo", "max_dim": 4})"));
  EXPECT_EQ(T.level_sizes(), builtin("dlo", 4).level_sizes());
  const auto S = functor_ref_from_json(parse_json(R"({"builtin": "dlo", "max_dim": 5, "shift": 1})"));
  EXPECT_EQ(S.level_size(1), builtin("dlo", 5).level_size(2));
  EXPECT_THROW(functor_ref_from_json(parse_json(R"({"builtin": 3})")), FormatError);
}

TEST(Serialization, ReportJson) {
  Report r;
  r.check = "x";
  Witness w;
  w.condition = "c";
  w.params = {{"k", 1}};
  r.fail(w);
  const auto j = report_to_json(r);
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_EQ(j.at("pass"), false);
  EXPECT_EQ(j.at("witnesses").size(), 1u);
}
