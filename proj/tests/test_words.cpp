#include <random>

#include "doctest.h"

#include "mip/caps.hpp"
#include "mip/error.hpp"
#include "mip/families.hpp"
#include "mip/group.hpp"
#include "mip/words.hpp"

using namespace mip;

namespace {

const std::vector<std::string> kAbc = {"a", "b", "c"};

Word letters(std::initializer_list<std::pair<std::size_t, bool>> ls) {
  std::vector<Letter> v;
  for (auto [g, inv] : ls) v.push_back({g, inv});
  return Word(v);
}

}  // namespace

TEST_CASE("commutator expansion") {
  // [b,a]*c^-1 = b^-1 a^-1 b a c^-1
  const Word w = parse_word("[b,a]*c^-1", kAbc);
  CHECK(w == letters({{1, true}, {0, true}, {1, false}, {0, false}, {2, true}}));
  CHECK(print_word(w, kAbc) == "b^-1*a^-1*b*a*c^-1");
}

TEST_CASE("powers and free reduction") {
  CHECK(parse_word("a^0", kAbc).empty());
  CHECK(parse_word("(a*b)^-2", kAbc) == letters({{1, true}, {0, true}, {1, true}, {0, true}}));
  CHECK(parse_word("a*b*b^-1*a^-1", kAbc).empty());
  CHECK(parse_word("1", kAbc).empty());
  CHECK(parse_word("a^3", kAbc).size() == 3);
  CHECK(parse_word("[[b,a],a]", kAbc).size() == 10);
  CHECK(print_word(Word{}, kAbc) == "1");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_word("a*x", kAbc), ParseError);
  CHECK_THROWS_AS(parse_word("a*", kAbc), ParseError);
  CHECK_THROWS_AS(parse_word("(a*b", kAbc), ParseError);
  CHECK_THROWS_AS(parse_word("a^", kAbc), ParseError);
  CHECK_THROWS_AS(parse_word("a^99999999999", kAbc), ParseError);
  try {
    parse_word("a*b)", kAbc);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("print then parse is the identity on reduced words") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> gen(0, 2), len(0, 12);
  std::bernoulli_distribution inv;
  for (int t = 0; t < 500; ++t) {
    std::vector<Letter> v;
    for (std::size_t i = len(rng); i-- > 0;) v.push_back({gen(rng), inv(rng)});
    const Word w(v);
    for (std::size_t i = 1; i < w.size(); ++i) {
      const auto& x = w.letters()[i - 1];
      const auto& y = w.letters()[i];
      CHECK_FALSE((x.gen == y.gen && x.inverse != y.inverse));
    }
    CHECK(parse_word(print_word(w, kAbc), kAbc) == w);
  }
}

TEST_CASE("Todd-Coxeter orders") {
  CHECK(todd_coxeter(Presentation::from_strings({"r", "s"}, {"r^4", "s^2", "(s*r)^2"})).order() == 8);
  CHECK(todd_coxeter(Presentation::from_strings({"a", "b"}, {"a^3", "b^2", "(a*b)^2"})).order() == 6);
  CHECK(todd_coxeter(Presentation::from_strings({"a", "b"}, {"a^2", "b^3", "(a*b)^3"})).order() == 12);
  CHECK(todd_coxeter(Presentation::from_strings({"a", "b"}, {"a^2", "b^3", "(a*b)^5"})).order() == 60);
  CHECK(todd_coxeter(Presentation::from_strings({"a"}, {"a^7"})).order() == 7);
  CHECK(todd_coxeter(Presentation::from_strings({"a"}, {"a"})).order() == 1);
  CHECK(todd_coxeter(Presentation::from_strings({"a", "b"}, {"a^4", "b^4", "[a,b]"})).order() == 16);
  CHECK(build(family::MaxClass3{4, 4}).order() == 81);
}

TEST_CASE("Todd-Coxeter errors") {
  CHECK_THROWS_AS(todd_coxeter(Presentation::from_strings({"a"}, {}), 10), CapExceeded);
  try {
    todd_coxeter(Presentation::from_strings({"a", "b"}, {"a^2"}), 50);
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == "coset_cap");
  }
  CHECK_THROWS_AS(todd_coxeter(Presentation{}), InvalidArgument);
}

TEST_CASE("relators hold and enumeration is deterministic") {
  for (const char* spec : {"D8", "Q8", "T:2,5", "T:7,5", "B2G:1,3", "B1H:2", "Meta:2,3,1,1,5"}) {
    CAPTURE(spec);
    const auto [P, order] = family_presentation(parse_family_spec(spec));
    const FiniteGroup G = todd_coxeter(P);
    const FiniteGroup H = todd_coxeter(P);
    CHECK(G.order() == order);
    CHECK(G.table() == H.table());
    CHECK(G.id() == 0);
    for (const auto& r : P.relators) CHECK(G.eval(r) == G.id());
  }
}

TEST_CASE("presentation JSON") {
  const Presentation P = Presentation::from_json_text(
      R"({"generators": ["a","b"], "relators": ["a^4", "b^2", "[b,a]*a^-2"]})");
  CHECK(P.generators == std::vector<std::string>{"a", "b"});
  CHECK(P.relators.size() == 3);
  const Presentation Q = Presentation::from_json_text(P.to_json_text());
  CHECK(Q.generators == P.generators);
  CHECK(Q.relators == P.relators);
  CHECK(todd_coxeter(P).order() == 8);
  CHECK_THROWS_AS(Presentation::from_json_text("{"), ParseError);
  CHECK_THROWS_AS(Presentation::from_json_text(R"({"generators": ["a","a"], "relators": []})"), ParseError);
  CHECK_THROWS_AS(Presentation::from_json_text(R"({"generators": ["a"], "relators": ["b"]})"), ParseError);
  CHECK_THROWS_AS(Presentation::from_file("/nonexistent/p.json"), ParseError);
}

TEST_CASE("caps JSON") {
  const Caps c = Caps::from_json_text(R"({"coset_cap": 5, "enum_cap": 100})");
  CHECK(c.coset_cap == 5);
  CHECK(c.enum_cap == 100);
  CHECK(c.group_order_cap == Caps{}.group_order_cap);
  CHECK_THROWS_AS(Caps::from_json_text(R"({"coset": 5})"), ParseError);
  CHECK_THROWS_AS(Caps::from_json_text(R"({"coset_cap": -1})"), ParseError);
  CHECK_THROWS_AS(Caps::from_json_text("[1]"), ParseError);
}
