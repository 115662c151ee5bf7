#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "lorenz/errors.hpp"
#include "lorenz/garside.hpp"
#include "lorenz/tlink.hpp"
#include "support.hpp"

using namespace lorenz;
using lorenz::testing::letters_of;
using lorenz::testing::uniform;

namespace {

LorenzVector vec(std::string_view text) { return parse_vector(text).vector; }
TParams tp(std::string_view text) { return parse_tparams(text); }

BraidWord concat3(const BraidWord& a, const BraidWord& b, const BraidWord& c) { return concat(concat(a, b), c); }

// Counted directly from the T-braid word.
struct ClosureData {
  int mu;
  long long excess;
  bool operator==(const ClosureData&) const = default;
};

ClosureData closure_data(const TParams& t) {
  const auto w = tbraid_word(t);
  return {cycle_count(permutation_of_word(w)), static_cast<long long>(w.length()) - w.strands()};
}

// Canonical pairs with r_i | s_i before the tail and r_{k-1} <= s_k.
TParams random_rewritable(std::mt19937& rng) {
  const int k = uniform(rng, 2, 3);
  std::vector<TwistPair> pairs;
  int r = 1;
  for (int i = 0; i + 1 < k; ++i) {
    r += uniform(rng, 1, 3);
    pairs.push_back({r, r * uniform(rng, 1, 3)});
  }
  const int last_r = r + uniform(rng, 1, 4);
  pairs.push_back({last_r, uniform(rng, r, r + 5)});
  return TParams(pairs);
}

}  // namespace

TEST_CASE("parameters parse, validate and canonicalize") {
  CHECK(format_tparams(tp("(2,4)(3,2)(6,1)(8,2)")) == "(2,4)(3,2)(6,1)(8,2)");
  CHECK(tp("(3,2)(2,4)") == tp("(2,4)(3,2)"));
  CHECK(tp("(3,6)(3,8)").canonical() == tp("(3,14)"));
  CHECK_FALSE(tp("(3,6)(3,8)").is_canonical());
  CHECK_THROWS_AS(TParams({{1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(TParams({{2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(TParams({{3, 1}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(parse_tparams("(2,4"), ParseError);
  CHECK_THROWS_AS(parse_tparams(""), ParseError);
  CHECK_THROWS_AS(parse_tparams("(a,2)"), ParseError);
}

TEST_CASE("T-braid words") {
  const auto w = tbraid_word(tp("(2,4)(3,2)(6,1)(8,2)"));
  CHECK(w.strands() == 8);
  CHECK(w.length() == 27);
  CHECK(tbraid_word(tp("(3,2)")) == BraidWord(3, {1, 2, 1, 2}));
  CHECK(tbraid_word(tp("(2,1)")) == BraidWord(2, {1}));
}

TEST_CASE("vector correspondence") {
  CHECK(vector_to_tparams(vec("2^4,3^2,6,8^2")) == tp("(2,4)(3,2)(6,1)(8,2)"));
  CHECK(tparams_to_vector(tp("(3,6)(8,3)")) == vec("3^6,8^3"));
  CHECK(vector_to_tparams(vec("5^7")) == tp("(5,7)"));
  auto rng = lorenz::testing::make_rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = lorenz::testing::random_normalized(rng, 20, 15);
    REQUIRE(tparams_to_vector(vector_to_tparams(v)) == v);
  }
}

TEST_CASE("X, Y, Z for the running example") {
  const auto v = vec("2^4,3^2,6,8^2");
  const auto x = x_word(v);
  const auto y = y_word(v);
  const auto z = z_word(v);
  CHECK(x.length() == 8);
  CHECK(y.length() == 6);
  CHECK(z.length() == 13);
  CHECK(z == concat3(bracket(3, 8, 8), bracket(2, 7, 8), bracket(1, 4, 8)));
  CHECK(words_equal(concat(y, z), concat3(bracket(1, 6, 8), bracket(1, 8, 8), bracket(1, 8, 8))));
  CHECK(words_equal(concat3(x, y, z), tbraid_word(vector_to_tparams(v))));
}

TEST_CASE("X Y Z and Y Z identities on random vectors") {
  auto rng = lorenz::testing::make_rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = lorenz::testing::random_normalized(rng, 12, 9);
    CAPTURE(format_vector(v));
    const auto y = y_word(v);
    const auto z = z_word(v);
    REQUIRE(words_equal(concat(y, z), yz_target_word(v)));
    REQUIRE(words_equal(concat3(x_word(v), y, z), tbraid_word(vector_to_tparams(v))));
  }
}

TEST_CASE("Z with an empty RR group") {
  const auto v = vec("2^2");
  CHECK(z_word(v).empty());
  CHECK(words_equal(concat3(x_word(v), y_word(v), z_word(v)), tbraid_word(tp("(2,2)"))));
}

TEST_CASE("index shift identity for brackets") {
  for (int w = 3; w <= 8; ++w) {
    for (int u = 1; u < w; ++u) {
      for (int v = u + 1; v < w; ++v) {
        REQUIRE(words_equal(concat(bracket(1, w, w), bracket(u, v, w)),
                            concat(bracket(u + 1, v + 1, w), bracket(1, w, w))));
      }
    }
  }
}

TEST_CASE("T duality") {
  CHECK(dual_tparams(tp("(4,7)")) == tp("(7,4)"));
  CHECK(dual_tparams(tp("(3,5)(7,2)")) == tp("(2,4)(7,3)"));
  CHECK(dual_tparams(tp("(2,4)(3,2)(6,1)(8,2)")) == tp("(2,2)(3,3)(5,1)(9,2)"));
  CHECK_THROWS_AS(dual_tparams(tp("(2,3)(5,1)")), InvalidArgument);
  auto rng = lorenz::testing::make_rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = lorenz::testing::random_normalized(rng, 25, 20);
    const auto t = vector_to_tparams(v);
    REQUIRE(dual_tparams(dual_tparams(t)) == t);
    REQUIRE(dual_tparams(t) == vector_to_tparams(dual_vector(v)));
  }
}

TEST_CASE("braid index examples") {
  CHECK(braid_index(tp("(2,4)(3,2)(6,1)(8,2)")) == 3);
  CHECK(braid_index(tp("(3,6)(8,3)")) == 3);
  CHECK(braid_index(tp("(5,3)")) == 3);
  CHECK(braid_index(tp("(3,5)")) == 3);
  CHECK_THROWS_AS(braid_index_small_k(tp("(2,2)(3,2)(4,2)")), InvalidArgument);
}

TEST_CASE("braid index formulas agree with the trip number") {
  auto rng = lorenz::testing::make_rng(44);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = lorenz::testing::random_normalized(rng, 30, 25);
    const auto t = vector_to_tparams(v);
    const int trip = trip_number(v);
    REQUIRE(braid_index(t) == trip);
    if (t.k() <= 2) REQUIRE(braid_index_small_k(t) == trip);
  }
  for (int r = 2; r <= 9; ++r) {
    for (int s = 2; s <= 9; ++s) {
      const TParams t({{r, s}});
      REQUIRE(braid_index(t) == std::min(r, s));
      REQUIRE(braid_index_small_k(t) == std::min(r, s));
    }
  }
}

TEST_CASE("torus rewrite examples") {
  const auto a = torus_simplify(tp("(3,6)(8,3)"));
  CHECK(a.applied);
  CHECK(a.result == tp("(3,14)"));
  const auto b = torus_simplify(tp("(2,2)(3,4)"));
  CHECK(b.applied);
  CHECK(b.result == tp("(2,2)(4,3)"));
  CHECK(closure_data(tp("(2,2)(3,4)")) == closure_data(b.result));
  const auto c = torus_simplify(tp("(2,3)(5,2)"));
  CHECK_FALSE(c.applied);
  CHECK(c.result == tp("(2,3)(5,2)"));
  CHECK_FALSE(torus_simplify(tp("(4,5)")).applied);
  CHECK(torus_simplify_all(tp("(3,6)(8,3)")) == tp("(3,14)"));
  CHECK(torus_simplify_all(tp("(2,3)(5,2)")) == tp("(2,3)(5,2)"));
}

TEST_CASE("torus rewrite preserves closure data") {
  auto rng = lorenz::testing::make_rng(45);
  int applied = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_rewritable(rng);
    const auto r = torus_simplify(t);
    REQUIRE(r.applied);
    ++applied;
    REQUIRE(closure_data(t) == closure_data(r.result));
    REQUIRE(closure_data(t) == closure_data(torus_simplify_all(t)));
    const auto v = normalize(tparams_to_vector(t)).vector;
    const auto w = normalize(tparams_to_vector(r.result)).vector;
    REQUIRE(trip_number(*v) == trip_number(*w));
  }
  CHECK(applied == 300);
}
