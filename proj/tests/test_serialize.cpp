#include <doctest.h>
#include <functional>

#include "ngc/errors.hpp"
#include "ngc/serialize.hpp"

using namespace ngc;

namespace {

MonoidalPtr z2() {
  const auto group = GroupSpec::elementary_2(1);
  return build_monoidal(group, Bicharacter::from_binary(group, {{1}}), 1);
}

std::string schema_pointer(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "no error";
}

}  // namespace

TEST_CASE("field value encodings") {
  const auto f = make_field(16);
  const CycloNum tau = z2()->tau();
  const Json j = to_json(tau);
  CHECK(j["conductor"] == 16);
  CHECK(j["coeffs"].size() == 8);
  CHECK(j["coeffs"][2] == "1/2");
  CHECK(j["coeffs"][0] == "0");
  CHECK(cyclo_from_json(j, f) == tau);

  CHECK(value_to_json(CycloNum::root(f, 5)) == Json{{"exp", 5}});
  CHECK(value_from_json(Json{{"exp", 5}}, f) == CycloNum::root(f, 5));
  CHECK(value_to_json(tau) == j);
  CHECK(value_from_json(j, f) == tau);

  CHECK(to_json(RootOfUnity(16, 3)) == Json{{"conductor", 16}, {"exp", 3}});
  CHECK(root_from_json(Json{{"conductor", 16}, {"exp", 3}}) == RootOfUnity(16, 3));
}

TEST_CASE("malformed values report a JSON pointer") {
  const auto f = make_field(16);
  CHECK(schema_pointer([&] { value_from_json(Json{{"exp", 16}}, f, "/x"); }) == "/x/exp");
  CHECK(schema_pointer([&] { value_from_json(Json{{"exp", "a"}}, f, "/x"); }) == "/x/exp");
  CHECK(schema_pointer([&] { cyclo_from_json(Json{{"conductor", 32}, {"coeffs", Json::array()}}, f, "/y"); }) == "/y/conductor");
  CHECK(schema_pointer([&] { cyclo_from_json(Json{{"conductor", 16}, {"coeffs", Json::array({"1/0"})}}, f, "/y"); }).starts_with("/y/coeffs"));
  CHECK_THROWS_AS(parse_json("{"), SchemaError);
}

TEST_CASE("monoidal data encoding") {
  const auto cat = z2();
  const Json j = to_json(*cat);
  CHECK(j == Json::parse(R"({"conductor": 16, "gram": [[1]], "group": {"factors": [2]}, "tau_sign": 1})"));
  const auto back = monoidal_from_json(j);
  CHECK(back->tau() == cat->tau());
  CHECK(back->chi().gram() == cat->chi().gram());

  Json missing = j;
  missing.erase("gram");
  CHECK(schema_pointer([&] { monoidal_from_json(missing, "/monoidal"); }) == "/monoidal/gram");
  Json wrong = j;
  wrong["conductor"] = 32;
  CHECK(schema_pointer([&] { monoidal_from_json(wrong, "/monoidal"); }) == "/monoidal/conductor");
  Json degenerate = Json::parse(R"({"conductor": 32, "gram": [[1, 0], [0, 0]], "group": {"factors": [2, 2]}, "tau_sign": 1})");
  CHECK(schema_pointer([&] { monoidal_from_json(degenerate); }) == "/gram");
  Json sign = j;
  sign["tau_sign"] = 2;
  CHECK(schema_pointer([&] { monoidal_from_json(sign); }) == "/tau_sign");
}

TEST_CASE("non elementary groups use gram exponents") {
  const GroupSpec z4({4});
  const auto cat = build_monoidal(z4, Bicharacter(z4, make_field(32), {{8}}), -1);
  const Json j = to_json(*cat);
  CHECK(j.contains("gram_exp"));
  CHECK_FALSE(j.contains("gram"));
  const auto back = monoidal_from_json(j);
  CHECK(back->chi().gram() == cat->chi().gram());
  CHECK(dump(to_json(*back)) == dump(j));
}

TEST_CASE("braiding records round trip") {
  const auto cat = z2();
  const auto list = enumerate_braidings(cat);
  const Document doc = classification_document(cat, list);
  REQUIRE(doc.braidings.size() == 4);
  const std::string text = dump(to_json(doc));
  CHECK(text.back() == '\n');
  const Document parsed = document_from_json(parse_json(text));
  REQUIRE(parsed.braidings.size() == 4);
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(parsed.braidings[i].data == list[i].data);
    REQUIRE(parsed.braidings[i].params.has_value());
    CHECK(*parsed.braidings[i].params == list[i].params);
    REQUIRE(parsed.braidings[i].twists.has_value());
    CHECK(parsed.braidings[i].twists->size() == 2);
  }
  CHECK(dump(to_json(parsed)) == text);
}

TEST_CASE("round trip at rank two and three is byte identical") {
  for (int n = 2; n <= 3; ++n) {
    const auto group = GroupSpec::elementary_2(n);
    const auto cat = build_monoidal(group, enumerate_forms(n).back(), -1);
    const std::string text = dump(to_json(classification_document(cat, enumerate_braidings(cat))));
    CHECK(dump(to_json(document_from_json(parse_json(text)))) == text);
  }
}

TEST_CASE("bare monoidal objects are accepted as documents") {
  const auto doc = document_from_json(to_json(*z2()));
  CHECK(doc.braidings.empty());
  CHECK(doc.monoidal->order() == 2);
}

TEST_CASE("malformed braiding tables are rejected with a pointer") {
  const auto cat = z2();
  const Json good = to_json(classification_document(cat, enumerate_braidings(cat)));

  Json missing = good;
  missing["braidings"][0]["sigma3"].erase("1");
  CHECK(schema_pointer([&] { document_from_json(missing); }).starts_with("/braidings/0/sigma3"));

  Json extra = good;
  extra["braidings"][1]["sigma1"]["7"] = Json{{"exp", 0}};
  CHECK(schema_pointer([&] { document_from_json(extra); }).starts_with("/braidings/1/sigma1"));

  Json no_monoidal = good;
  no_monoidal.erase("monoidal");
  CHECK_THROWS_AS(document_from_json(no_monoidal), SchemaError);

  Json bad_delta = good;
  bad_delta["braidings"][0]["params"]["delta"] = Json::array({3});
  CHECK(schema_pointer([&] { document_from_json(bad_delta); }).starts_with("/braidings/0/params"));
}
