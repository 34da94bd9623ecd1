#include <gtest/gtest.h>

#include "invstar/json_io.hpp"
#include "support.hpp"

namespace invstar {
namespace {

namespace json = invstar::json;
using Json = nlohmann::json;

TEST(Json, Scalars) {
  EXPECT_EQ(json::to_json(Rational(-3) / Rational(4)), "-3/4");
  EXPECT_EQ(json::rational_from_json("6/8"), Rational(3) / Rational(4));
  EXPECT_EQ(json::rational_from_json(5), Rational(5));
  const RationalFunction f(test::poly({"1"}), test::poly({"0", "2"}));
  EXPECT_EQ(json::rational_function_from_json(json::to_json(f)), f);
}

TEST(Json, AlgebraRoundTrip) {
  for (const auto& alg : {test::sl2(Rational(5) / Rational(3)), test::heisenberg(2, 3), test::virasoro(2, -1, 3),
                          builtin::random_two_step(4)}) {
    const Json j = json::algebra_to_json(*alg);
    const AlgebraPtr back = json::algebra_from_json(j);
    EXPECT_EQ(json::algebra_to_json(*back), j);
    EXPECT_EQ(back->explicit_brackets(), alg->explicit_brackets());
    EXPECT_EQ(back->out_of_window_pairs(), alg->out_of_window_pairs());
    EXPECT_EQ(Shapovalov(back).canonical_element(3).tensor().size(), Shapovalov(alg).canonical_element(3).tensor().size());
    EXPECT_EQ(json::to_json(star_series(Shapovalov(back).canonical_element(3), alg->truncated() ? 3 : 3 / alg->top_degree())),
              json::to_json(star_series(Shapovalov(alg).canonical_element(3), alg->truncated() ? 3 : 3 / alg->top_degree())));
  }
}

TEST(Json, MalformedSpecs) {
  EXPECT_THROW(json::algebra_from_json(Json::object()), SpecError);
  EXPECT_THROW(json::algebra_from_json(Json{{"name", "x"}, {"cutoff", 1}, {"generators", 3}}), SpecError);
  const Json unknown = Json::parse(R"({"name": "x", "cutoff": 1, "generators": [{"name": "a", "degree": 0}],
      "character": [{"gen": "b", "value": "1"}]})");
  EXPECT_THROW(json::algebra_from_json(unknown), SpecError);
  const Json bad_rational = Json::parse(R"({"name": "x", "cutoff": 1, "generators": [{"name": "a", "degree": 0}],
      "character": [{"gen": "a", "value": "1/x"}]})");
  EXPECT_THROW(json::algebra_from_json(bad_rational), SpecError);
}

TEST(Json, StarProductShape) {
  const auto alg = test::heisenberg(1, 1);
  const Json j = json::to_json(star_series(Shapovalov(alg).canonical_element(2), 2));
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["complete"], true);
  ASSERT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["components"][2]["terms"][0]["slots"], Json::parse(R"(["q1^2", "p1^2"])"));
  EXPECT_EQ(j["components"][2]["terms"][0]["coeff"], "1/2");
}

}  // namespace
}  // namespace invstar
