#include "doctest.h"
#include "support.hpp"

#include "acn/catalog.hpp"
#include "acn/io.hpp"

using namespace acn;
using acn::io::json;

TEST_SUITE_BEGIN("io");

namespace {

json minimal_doc() {
  return json::parse(R"({
    "symbols": ["a"],
    "relations": [],
    "dim": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": {"1,2": ["0", "0", "a"]},
    "metric": [["1","0","0"],["0","-1","0"],["0","0","1"]],
    "phi": [["0","-1","0"],["1","0","0"],["0","0","0"]],
    "xi": ["0","0","1"],
    "eta": ["0","0","1"]
  })");
}

} // namespace

TEST_CASE("a minimal document builds") {
  io::BuiltDocument built = io::build(io::document_from_json(minimal_doc()));
  CHECK(built.space.dim() == 3);
  CHECK(built.space.frame.bracket(0, 1)[2] == Fraction(Scalar::symbol(built.table, "a")));
  CHECK(check_acn_axioms(built.space).all_pass());
}

TEST_CASE("schema violations carry the field name") {
  json j = minimal_doc();
  j.erase("metric");
  CHECK_THROWS_WITH_AS(io::document_from_json(j),
                       doctest::Contains("missing required field 'metric'"), ValidationError);

  j = minimal_doc();
  j["brackets"] = json{{"2,1", {"0", "0", "0"}}};
  CHECK_THROWS_AS(io::document_from_json(j), ValidationError);

  j = minimal_doc();
  j["brackets"] = json{{"1,7", {"0", "0", "0"}}};
  CHECK_THROWS_AS(io::document_from_json(j), ValidationError);

  j = minimal_doc();
  j["basis"] = {"e1", "e2"};
  CHECK_THROWS_AS(io::document_from_json(j), ValidationError);
}

TEST_CASE("build-level failures") {
  // even dimension
  json j = minimal_doc();
  j["dim"] = 2;
  j["basis"] = {"e1", "e2"};
  j["brackets"] = json::object();
  j["metric"] = {{"1", "0"}, {"0", "1"}};
  j["phi"] = {{"0", "0"}, {"0", "0"}};
  j["xi"] = {"0", "1"};
  j["eta"] = {"0", "1"};
  CHECK_THROWS_AS(io::build(io::document_from_json(j)), ValidationError);

  // singular metric is a computation precondition, not a schema error
  j = minimal_doc();
  j["metric"] = {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}};
  CHECK_THROWS_AS(io::build(io::document_from_json(j)), PreconditionError);

  // expression errors point at the entry
  j = minimal_doc();
  j["xi"] = {"0", "0", "oops"};
  CHECK_THROWS_WITH_AS(io::build(io::document_from_json(j)), doctest::Contains("xi[2]"),
                       ParseError);
}

TEST_CASE("relation validation flows through the symbol table") {
  json j = minimal_doc();
  j["symbols"] = {"a", "r"};
  j["relations"] = json::array({json{{"symbol", "a"}, {"square", "r"}}});
  CHECK_THROWS_AS(io::build(io::document_from_json(j)), ValidationError);
}

TEST_CASE("document json round trip") {
  io::InputDocument doc = io::document_from_json(minimal_doc());
  json j = io::document_to_json(doc);
  io::InputDocument doc2 = io::document_from_json(j);
  CHECK(io::document_to_json(doc2) == j);
}

TEST_CASE("catalog bundles export and rebuild to the same structures") {
  for (const catalog::ExampleBundle& b : {catalog::example_H3(), catalog::example_H()}) {
    io::InputDocument doc = io::document_from_bundle(b);
    json j = io::document_to_json(doc);
    io::BuiltDocument built = io::build(io::document_from_json(j));
    CHECK(built.space.dim() == b.ambient.dim());
    // brackets, metric, structure data all agree entrywise
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t k = i + 1; k < 5; ++k) {
        const FVec& lhs = built.space.frame.bracket(i, k);
        const FVec& rhs = b.ambient.frame.bracket(i, k);
        REQUIRE(lhs.size() == rhs.size());
        for (std::size_t l = 0; l < 5; ++l)
          CHECK(lhs[l].num().terms() == rhs[l].num().terms());
      }
    CHECK(check_acn_axioms(built.space).all_pass());
    REQUIRE(built.section.has_value());
    REQUIRE(built.induce.has_value());
    Decomposition dec = decompose(built.space, *built.section);
    CHECK(dec.kind == b.kind);
  }
}

TEST_CASE("sample documents on disk load and validate") {
  io::BuiltDocument g = io::build(io::load_document(std::string(ACN_DATA_DIR) + "/g_ambient.json"));
  CHECK(check_jacobi(g.space.frame).all_pass());
  CHECK(check_acn_axioms(g.space).all_pass());
  CHECK_FALSE(g.section.has_value());

  io::BuiltDocument h3 = io::build(io::load_document(std::string(ACN_DATA_DIR) + "/h3.json"));
  REQUIRE(h3.section.has_value());
  CHECK(h3.section->tangent_names == std::vector<std::string>{"X1", "X4", "xi"});

  CHECK_THROWS_AS(io::load_document(std::string(ACN_DATA_DIR) + "/does_not_exist.json"),
                  ValidationError);
}

TEST_SUITE_END();
