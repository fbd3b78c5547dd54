#include <set>

#include "doctest.h"
#include "psmonoid/insertion.hpp"
#include "psmonoid/presentation.hpp"

using namespace psmonoid;

TEST_CASE("left relation swaps a decreasing run past the small symbol") {
  // y u x -> y x u with x < y <= u, run strictly decreasing
  Word w = Word::parse("231");
  auto matches = relation_matches(w, Variant::left);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].direction == RelationMatch::Direction::forward);
  CHECK(matches[0].y == 2);
  CHECK(matches[0].x == 1);
  CHECK(matches[0].run == std::vector<Symbol>{3});
  CHECK(matches[0].apply(w) == Word::parse("213"));
  CHECK(equivalent(w, Word::parse("213"), Variant::left));
}

TEST_CASE("right relation admits equal symbols on both sides") {
  // x <= y < u_1 <= ... weakly decreasing run
  Word w = Word::parse("121");
  auto matches = relation_matches(w, Variant::right);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].y == 1);
  CHECK(matches[0].x == 1);
  CHECK(matches[0].apply(w) == Word::parse("112"));
  CHECK(equivalent(w, Word::parse("112"), Variant::right));
  // the same word admits no left-variant match: x < y fails
  CHECK(relation_matches(w, Variant::left).empty());
}

TEST_CASE("backward matches recover the other side") {
  Word w = Word::parse("212");
  auto matches = relation_matches(w, Variant::left);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].direction == RelationMatch::Direction::backward);
  CHECK(matches[0].apply(w) == Word::parse("221"));
  CHECK(equivalent(w, Word::parse("221"), Variant::left));
}

TEST_CASE("runs may span several symbols") {
  // y=2, run=4 3, x=1: both orientations around position 0
  Word w = Word::parse("2431");
  auto matches = relation_matches(w, Variant::left);
  bool found = false;
  for (const auto& m : matches) {
    if (m.run == std::vector<Symbol>{4, 3} && m.x == 1) {
      found = true;
      CHECK(m.apply(w) == Word::parse("2143"));
    }
  }
  CHECK(found);
}

TEST_CASE("weakly decreasing runs only count on the right") {
  Word w = Word::parse("1331");  // y=1, run=3 3, x=1
  auto right_matches = relation_matches(w, Variant::right);
  bool spans = false;
  for (const auto& m : right_matches) {
    if (m.run == std::vector<Symbol>{3, 3}) spans = true;
  }
  CHECK(spans);
  for (const auto& m : relation_matches(w, Variant::left)) {
    CHECK(m.run != std::vector<Symbol>{3, 3});
  }
}

TEST_CASE("rewrite neighbors preserve the tableau") {
  for (const char* text : {"4511432", "2121", "35142", "111"}) {
    Word w = Word::parse(text);
    for (Variant v : {Variant::left, Variant::right}) {
      for (const Word& n : rewrite_neighbors(w, v)) {
        CHECK(n != w);
        CHECK(equivalent(w, n, v));
      }
    }
  }
}

TEST_CASE("some words admit no rewrites") {
  CHECK(rewrite_neighbors(Word::parse("1234"), Variant::right).empty());
  CHECK(rewrite_neighbors(Word{}, Variant::left).empty());
  CHECK(rewrite_neighbors(Word::parse("1"), Variant::right).empty());
}

TEST_CASE("congruence closure is the insertion fiber") {
  // the rewriting relations present exactly the insertion congruence
  for (const char* ev : {"(2,2)", "(1,1,1,1)", "(2,1,1)", "(3,2)"}) {
    const Evaluation e = Evaluation::parse(ev);
    for (Variant v : {Variant::left, Variant::right}) {
      detail::for_each_word_of(e, [&](const std::vector<Symbol>& s) {
        Word w{std::vector<Symbol>(s)};
        CHECK(congruence_closure(w, v) == words_of(insert_word(w, v)));
      });
    }
  }
}

TEST_CASE("closure of a rigid word is itself") {
  CHECK(congruence_closure(Word::parse("1234"), Variant::right) ==
        std::vector<Word>{Word::parse("1234")});
}

TEST_CASE("closure respects the guard") {
  Word w = Word::parse("10,9,8,7,6,5,4,3,2,1");
  CHECK_THROWS_AS(congruence_closure(w, Variant::left, 100), guard_exceeded);
}
