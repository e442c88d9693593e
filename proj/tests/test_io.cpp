#include <doctest.h>

#include "fimod/free_module.hpp"
#include "fimod/functors.hpp"
#include "fimod/io.hpp"
#include "fimod/random_module.hpp"

using namespace fimod;

TEST_SUITE("io") {

TEST_CASE("save then load is byte-stable for 50 random modules")
{
  const Field fields[] = {Field::rationals(), Field::prime(2), Field::prime(5)};
  const Profile profiles[] = {Profile::Free, Profile::Quotient, Profile::Shifted, Profile::Mixed};
  for (std::uint64_t s = 0; s < 50; ++s) {
    RandomModule r = random_module(s, profiles[s % 4], fields[s % 3], 3 + s % 2);
    nlohmann::json header{{"profile", profile_name(r.profile)}, {"seed", r.seed}};
    std::string text = dump_module(r.module, header);
    ModuleFile back = parse_module(text);
    CHECK(back.module == r.module);
    CHECK(back.header == header);
    CHECK(dump_module(back.module, back.header) == text);
  }
}

TEST_CASE("rationals survive the round trip")
{
  Field q = Field::rationals();
  TruncatedFIModule v = make_free(1, q, 2);
  std::vector<std::vector<Matrix>> ts(3);
  ts[2].push_back(v.transposition(2, 1));
  ScalarOps ops(q);
  Matrix inc = v.inclusion(1);
  inc(0, 0) = ops.parse("-3/7");
  inc(1, 0) = ops.parse("-3/7");
  TruncatedFIModule scaled(q, 2, {0, 1, 2}, ts, {v.inclusion(0), inc});
  REQUIRE(validate(scaled).ok());
  std::string text = dump_module(scaled);
  CHECK(text.find("\"-3/7\"") != std::string::npos);
  CHECK(parse_module(text).module == scaled);
}

TEST_CASE("non-canonical scalars are canonicalized")
{
  std::string text = dump_module(make_free(0, Field::prime(5), 1));
  auto pos = text.find("\"1\"");
  REQUIRE(pos != std::string::npos);
  std::string alt = text;
  alt.replace(pos, 3, "\"6\"");
  ModuleFile m = parse_module(alt);
  CHECK(dump_module(m.module) == text);
}

TEST_CASE("malformed files name the problem")
{
  auto message = [](const std::string& text) {
    try {
      parse_module(text);
    } catch (const FimodError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{\"field\": {\"kind\": \"Q\"},\n \"trunc\": 1,").find("line 2") != std::string::npos);
  CHECK(message(R"({"trunc": 0, "dims": [1], "transpositions": {}, "inclusions": []})").find("'field'") !=
        std::string::npos);
  CHECK(message(R"({"field": {"kind": "Fp", "p": 4}, "trunc": 0, "dims": [1], "transpositions": {}, "inclusions": []})")
            .find("field.p") != std::string::npos);
  CHECK(message(R"({"field": {"kind": "Q"}, "trunc": 1, "dims": [1, 1], "transpositions": {}, "inclusions": [[["1", "0"]]]})")
            .find("inclusions[0]") != std::string::npos);
  CHECK(message(R"({"field": {"kind": "Q"}, "trunc": 1, "dims": [1, 1], "transpositions": {}, "inclusions": [[[1]]]})")
            .find("strings") != std::string::npos);
  CHECK(message(R"({"field": {"kind": "Q"}, "trunc": 0, "dims": [1], "transpositions": {}, "inclusions": [], "x": 1})")
            .find("unknown key") != std::string::npos);
}

TEST_CASE("invalid modules are rejected with the first failed relation")
{
  std::string text = R"({"field": {"kind": "Q"}, "trunc": 2, "dims": [1, 1, 1],
    "transpositions": {"2": [[["-1"]]]}, "inclusions": [[["1"]], [["1"]]]})";
  try {
    parse_module(text);
    FAIL("expected a validation error");
  } catch (const FimodError& e) {
    CHECK(std::string(e.what()).find("validation error") != std::string::npos);
    CHECK(std::string(e.what()).find("stabilizer") != std::string::npos);
  }
}

TEST_CASE("functor images round-trip")
{
  TruncatedFIModule v = make_free(1, Field::prime(2), 4);
  for (FunctorTag t : {FunctorTag::Shift, FunctorTag::Derivative, FunctorTag::NegShift, FunctorTag::QPrime}) {
    TruncatedFIModule w = apply_functor(t, v);
    CHECK(parse_module(dump_module(w)).module == w);
  }
}

}  // TEST_SUITE
