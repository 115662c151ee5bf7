#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <functional>
#include <cmath>
#include <numeric>

#include "lorenz/garside.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/tlink.hpp"
#include "lorenz/torus_detect.hpp"
#include "support.hpp"

using namespace lorenz;

namespace {

LorenzVector vec(std::string_view text) { return parse_vector(text).vector; }

double seconds_of(const std::function<void()>& f) {
  double best = 1e9;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

// Least-squares slope of log(time) against log(size).
double fitted_exponent(const std::vector<double>& sizes, const std::vector<double>& times) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(sizes[i]);
    const double y = std::log(times[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("verdict rendering") {
  CHECK(to_string(TorusVerdict::torus(3, 14)) == "Torus(3,14)");
  CHECK(to_string(TorusVerdict::not_torus()) == "NotTorus");
  CHECK(to_string(TorusVerdict::unknot()) == "Unknot");
}

TEST_CASE("torus vectors") {
  CHECK(is_torus(vec("3^6,8^3")) == TorusVerdict::torus(3, 14));
  for (int r = 2; r <= 5; ++r) {
    for (int s = r; s <= 10; ++s) {
      REQUIRE(is_torus(LorenzVector(std::vector<int>(s, r))) == TorusVerdict::torus(r, s));
      REQUIRE(is_torus(LorenzVector(std::vector<int>(r, s))) == TorusVerdict::torus(r, s));
    }
  }
}

TEST_CASE("non-torus and unknot verdicts") {
  CHECK(is_torus(vec("2^2,3^5")) == TorusVerdict::not_torus());
  CHECK(is_torus(vec("2^4,3^2,6,8^2")) == TorusVerdict::not_torus());
  CHECK(is_torus(vec("1,1,4")) == TorusVerdict::unknot());
  CHECK(is_torus(vec("7")) == TorusVerdict::unknot());
  CHECK(is_torus(vec("2,2,3,4")) == is_torus(vec("2,2,3,3")));
}

TEST_CASE("torus verdicts respect the length condition") {
  auto rng = lorenz::testing::make_rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = lorenz::testing::random_normalized(rng, 12, 10);
    const auto verdict = is_torus(v);
    if (verdict.kind != TorusVerdict::Kind::Torus) continue;
    const auto m = minimal_braid_word(v);
    REQUIRE(verdict.t == m.strands());
    REQUIRE(static_cast<long long>(m.length()) == static_cast<long long>(verdict.q) * (verdict.t - 1));
    REQUIRE(verdict.q >= verdict.t);
  }
}

TEST_CASE("rewritable T-links and their rewrites get the same verdict") {
  auto rng = lorenz::testing::make_rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const int r1 = lorenz::testing::uniform(rng, 2, 4);
    const int s1 = r1 * lorenz::testing::uniform(rng, 1, 3);
    const int r2 = r1 + lorenz::testing::uniform(rng, 1, 5);
    const int s2 = lorenz::testing::uniform(rng, std::max(r1, 2), r1 + 6);
    const TParams t({{r1, s1}, {r2, s2}});
    const auto rewrite = torus_simplify(t);
    REQUIRE(rewrite.applied);
    REQUIRE(is_torus(tparams_to_vector(t)) == is_torus(tparams_to_vector(rewrite.result)));
  }
  CHECK(is_torus(tparams_to_vector(TParams({{2, 2}, {3, 2}}))) == TorusVerdict::torus(2, 5));
}

TEST_CASE("runtime grows at most polynomially with a small exponent") {
  // Triples on t = 8 strands with |M| = 56 + 14 * scale, divisible by t - 1,
  // so the word test always runs.
  std::vector<double> sizes, times;
  for (int scale : {20, 40, 70, 139}) {
    TmTriple triple{8, std::vector<int>(7, 0), std::vector<int>(7, 0)};
    triple.n[0] = 3 * scale;
    triple.m[3] = scale;
    triple.n[6] = scale;
    const auto v = vector_from_triple(triple);
    const auto m = minimal_braid_word(triple);
    const double elapsed = seconds_of([&] { (void)is_torus(v); });
    sizes.push_back(static_cast<double>(m.length()));
    times.push_back(std::max(elapsed, 1e-6));
    MESSAGE("|M| = " << m.length() << ": " << elapsed << " s");
  }
  CHECK(sizes.back() >= 1900);
  CHECK(sizes.back() <= 2100);
  const double exponent = fitted_exponent(sizes, times);
  MESSAGE("fitted exponent " << exponent);
  CHECK(exponent <= 3.0);
}

TEST_CASE("<2^2,3^4> closes to the torus knot T(3,5)") {
  CHECK(is_torus(vec("2^2,3^4")) == TorusVerdict::torus(3, 5));
  // sigma_1^2 (sigma_1 sigma_2)^4 is conjugate to (sigma_1 sigma_2)^5 by a cyclic rotation.
  const auto w = tbraid_word(TParams({{2, 2}, {3, 4}}));
  bool rotated = false;
  for (std::size_t k = 0; k < w.length(); ++k) rotated = rotated || words_equal(rotate(w, k), periodic_word(3, 5));
  CHECK(rotated);
  const auto torus_35 = LaurentPoly(0, {1, -1, 0, 1, -1, 1, 0, -1, 1});
  CHECK(poly_equal_up_to_units(burau_alexander(w), torus_35));
  // <2^2,3^5> carries the (-2,3,7) pretzel polynomial instead.
  const auto lehmer = LaurentPoly(0, {1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1});
  CHECK(poly_equal_up_to_units(burau_alexander(tbraid_word(TParams({{2, 2}, {3, 5}}))), lehmer));
}
