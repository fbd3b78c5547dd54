#include <random>

#include "doctest.h"
#include "psmonoid/core.hpp"
#include "psmonoid/insertion.hpp"

using namespace psmonoid;

TEST_CASE("word parses digit shorthand") {
  Word w = Word::parse("4511432");
  REQUIRE(w.size() == 7);
  CHECK(w[0] == 4);
  CHECK(w[6] == 2);
  CHECK(w.str() == "4511432");
}

TEST_CASE("word parses comma form with large symbols") {
  Word w = Word::parse("10,2,3");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == 10);
  CHECK(w.str() == "10,2,3");
}

TEST_CASE("single large symbol keeps a trailing comma for round trips") {
  Word w({12});
  CHECK(w.str() == "12,");
  CHECK(Word::parse("12,") == w);
  // without the comma the same text means two symbols
  CHECK(Word::parse("12") == Word({1, 2}));
}

TEST_CASE("empty word round trips") {
  Word w = Word::parse("");
  CHECK(w.empty());
  CHECK(w.str() == "");
}

TEST_CASE("word rejects malformed text") {
  CHECK_THROWS_AS(Word::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("-3"), std::invalid_argument);
}

TEST_CASE("word concatenation and comparison") {
  Word a = Word::parse("12");
  Word b = Word::parse("3");
  CHECK((a + b).str() == "123");
  CHECK(a < b);
  CHECK(Word{} < a);
}

TEST_CASE("evaluation counts symbols") {
  Evaluation e = Evaluation::of(Word::parse("4511432"));
  CHECK(e.str() == "(2,1,1,2,1)");
  CHECK(e.count(1) == 2);
  CHECK(e.count(5) == 1);
  CHECK(e.count(6) == 0);
  CHECK(e.max_symbol() == 5);
  CHECK(e.total() == 7);
  CHECK(e.contiguous());
  CHECK_FALSE(e.standard());
}

TEST_CASE("evaluation text round trips") {
  Evaluation e = Evaluation::parse("(2,0,1)");
  CHECK(e.count(2) == 0);
  CHECK(e.str() == "(2,0,1)");
  CHECK_FALSE(e.contiguous());
  CHECK(Evaluation::parse(e.str()) == e);
  // parentheses are optional on input
  CHECK(Evaluation::parse("2,1") == Evaluation::parse("(2,1)"));
  CHECK_THROWS_AS(Evaluation::parse("(2,-1)"), std::invalid_argument);
  CHECK_THROWS_AS(Evaluation::parse("(2,x)"), std::invalid_argument);
}

TEST_CASE("evaluation trims trailing zero counts") {
  Evaluation e(std::vector<int>{1, 1, 0, 0});
  CHECK(e.max_symbol() == 2);
  CHECK(e == Evaluation(std::vector<int>{1, 1}));
}

TEST_CASE("standard evaluations") {
  CHECK(Evaluation::parse("(1,1,1)").standard());
  CHECK_FALSE(Evaluation::parse("(2,1)").standard());
  CHECK(is_standard(Word::parse("4132")));
  CHECK_FALSE(is_standard(Word::parse("413")));
  CHECK_FALSE(is_standard(Word::parse("1132")));
}

TEST_CASE("multiset lists symbols in order") {
  Evaluation e = Evaluation::parse("(2,1)");
  CHECK(e.multiset() == std::vector<Symbol>{1, 1, 2});
}

TEST_CASE("multinomial") {
  CHECK(multinomial(Evaluation::parse("(1,1,1,1)")) == 24);
  CHECK(multinomial(Evaluation::parse("(2,2)")) == 6);
  CHECK(multinomial(Evaluation::parse("(5)")) == 1);
  CHECK(multinomial(Evaluation(std::vector<int>(9, 1))) == 362880);
}

TEST_CASE("multinomial clamps instead of overflowing") {
  Evaluation e(std::vector<int>(20, 5));
  CHECK(multinomial(e) >= std::uint64_t{1} << 62);
}

TEST_CASE("guard trips on large classes") {
  CHECK_NOTHROW(check_guard(Evaluation(std::vector<int>(9, 1)), kDefaultGuard));
  CHECK_THROWS_AS(check_guard(Evaluation(std::vector<int>(10, 1)), kDefaultGuard),
                  guard_exceeded);
  try {
    check_guard(Evaluation::parse("(1,1,1)"), 2);
    CHECK(false);
  } catch (const guard_exceeded& ex) {
    CHECK(std::string(ex.what()).find("guard") != std::string::npos);
  }
}

TEST_CASE("rotations are distinct and sorted") {
  auto rots = rotations(Word::parse("1234"));
  REQUIRE(rots.size() == 4);
  CHECK(rots[0] == Word::parse("1234"));
  CHECK(rots[3] == Word::parse("4123"));
  CHECK(rotations(Word::parse("2121")) ==
        std::vector<Word>{Word::parse("1212"), Word::parse("2121")});
  CHECK(rotations(Word::parse("111")) == std::vector<Word>{Word::parse("111")});
  CHECK(rotations(Word{}) == std::vector<Word>{Word{}});
}

TEST_CASE("tableau validity by variant") {
  // left: columns strictly increase upward, bottom row weakly increases
  Tableau left(Variant::left, {{1, 4}, {1, 5}, {2, 3, 4}});
  CHECK(left.valid());
  CHECK_FALSE(Tableau(Variant::left, {{1, 1}}).valid());
  CHECK_FALSE(Tableau(Variant::left, {{2}, {1}}).valid());
  // right: columns weakly increase upward, bottom row strictly increases
  Tableau right(Variant::right, {{1, 1, 4}, {2, 3, 4, 5}});
  CHECK(right.valid());
  CHECK(Tableau(Variant::right, {{1, 1}}).valid());
  CHECK_FALSE(Tableau(Variant::right, {{1}, {1}}).valid());
  CHECK_FALSE(Tableau(Variant::right, {{2, 1}}).valid());
  // empty columns are rejected outright, empty tableaux are fine
  CHECK_THROWS_AS(Tableau(Variant::left, {{}}), std::invalid_argument);
  CHECK(Tableau(Variant::left).valid());
  CHECK(Tableau(Variant::left).empty());
}

TEST_CASE("tableau size and bottom row") {
  Tableau t(Variant::right, {{1, 1, 4}, {2, 3, 4, 5}});
  CHECK(t.size() == 7);
  CHECK(t.bottom_row() == std::vector<Symbol>{1, 2});
}

TEST_CASE("tableau json round trip") {
  Tableau t(Variant::left, {{1, 4}, {1, 5}, {2, 3, 4}});
  CHECK(t.dump() == R"({"columns":[[1,4],[1,5],[2,3,4]],"variant":"left"})");
  CHECK(Tableau::from_json(t.to_json()) == t);
  CHECK_THROWS_AS(Tableau::from_json(nlohmann::json::parse(
                      R"({"columns":[[1]],"variant":"middle"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(Tableau::from_json(nlohmann::json::parse(R"({"variant":"left"})")),
                  std::invalid_argument);
}

TEST_CASE("json round trip over random words") {
  std::mt19937 rng(20230815);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> sym(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Symbol> s(len(rng));
    for (auto& x : s) x = sym(rng);
    for (Variant v : {Variant::left, Variant::right}) {
      Tableau t = insert_word(Word(s), v);
      Tableau back = Tableau::from_json(nlohmann::json::parse(t.dump()));
      CHECK(back == t);
      CHECK(back.valid());
    }
  }
}

TEST_CASE("evaluation of a tableau matches its words") {
  Word w = Word::parse("4511432");
  for (Variant v : {Variant::left, Variant::right}) {
    CHECK(evaluation_of(insert_word(w, v)) == Evaluation::of(w));
  }
}

TEST_CASE("hash agrees on equal tableaux") {
  Tableau a = insert_word(Word::parse("4511432"), Variant::right);
  Tableau b = insert_word(Word::parse("4115432"), Variant::right);
  REQUIRE(a == b);
  CHECK(TableauHash{}(a) == TableauHash{}(b));
}

TEST_CASE("variant names") {
  CHECK(variant_name(Variant::left) == "left");
  CHECK(variant_name(Variant::right) == "right");
  CHECK(parse_variant("left") == Variant::left);
  CHECK_THROWS_AS(parse_variant("up"), std::invalid_argument);
}
