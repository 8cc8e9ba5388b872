#include <gtest/gtest.h>

#include "ramcover/cover_json.hpp"
#include "ramcover/family.hpp"

using namespace ramcover;

TEST(CoverJson, RoundTrip) {
  for (int g = 1; g <= 6; ++g) {
    const Cover c = build_family(g).cover;
    const Json doc = cover_to_json(c);
    ASSERT_EQ(cover_from_json(doc), c);
    ASSERT_EQ(cover_from_json_text(doc.dump()), c);
  }
}

TEST(CoverJson, FieldOrderAndExtraKeys) {
  Json doc = cover_to_json(build_family(2).cover);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"source_rhs", "target_rhs", "f1", "f2", "degree"}));
  doc["comment"] = "ignored";
  EXPECT_EQ(cover_from_json(doc), build_family(2).cover);
}

TEST(CoverJson, Errors) {
  const Json good = cover_to_json(build_family(2).cover);
  EXPECT_THROW(cover_from_json_text("{"), ParseError);
  EXPECT_THROW(cover_from_json_text("[1,2]"), ParseError);
  for (const char* key : {"source_rhs", "target_rhs", "f1", "f2", "degree"}) {
    Json d = good;
    d.erase(key);
    EXPECT_THROW(cover_from_json(d), ParseError) << key;
  }
  Json d = good;
  d["f1"] = "x^3/(";
  try {
    cover_from_json(d);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("f1"), std::string::npos);
  }
  d = good;
  d["degree"] = 0;
  EXPECT_THROW(cover_from_json(d), ParseError);
  d = good;
  d["source_rhs"] = 5;
  EXPECT_THROW(cover_from_json(d), ParseError);
  d = good;
  d["source_rhs"] = "0";
  EXPECT_THROW(cover_from_json(d), ParseError);
}
