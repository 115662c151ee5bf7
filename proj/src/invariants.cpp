#include "lorenz/invariants.hpp"

#include <numeric>
#include <string>

#include "lorenz/errors.hpp"

namespace lorenz {

InvariantReport unknot_report() {
  InvariantReport r;
  r.unknot = true;
  r.milestones = {{{"L", 0, 1}, {"T", 0, 1}, {"Tdual", 0, 1}, {"M", 0, 1}}};
  r.excess = -1;
  r.predicted_degree = 0;
  r.crossing_bound = 0;
  return r;
}

InvariantReport invariant_report(const LorenzVector& v) {
  if (!v.is_normalized()) throw InvalidArgument("invariant_report requires a normalized vector");
  InvariantReport r;
  r.trip = trip_number(v);
  r.components = cycle_count(lorenz_permutation(v));
  r.milestones = milestone_table(v);
  r.excess = r.milestones[0].excess();
  for (const auto& entry : r.milestones) {
    if (entry.excess() != r.excess) throw InternalError("c - n differs between representations");
  }
  const long long twice_genus = r.excess + 2 - r.components;
  if (twice_genus < 0 || twice_genus % 2 != 0) throw InternalError("genus formula gave a non-integer");
  r.genus = twice_genus / 2;
  r.unknotting = r.genus + r.components - 1;
  r.min_crossings = r.milestones[3].crossings;
  r.predicted_degree = r.excess + 1;
  r.crossing_bound = 4 * r.genus + 2 * r.components - 2;
  const auto& tbraid = r.milestones[1];
  r.crossing_bound_holds = tbraid.crossings == 2 * r.genus + r.components + tbraid.strands - 2 &&
                           tbraid.crossings <= r.crossing_bound;
  return r;
}

namespace {

// Smallest x in (0, mod) with a*x = target (mod mod).
int solve_congruence(int a, int target, int mod) {
  for (int x = 1; x < mod; ++x) {
    if (((static_cast<long long>(a) * x - target) % mod + mod) % mod == 0) return x;
  }
  throw Unsupported("congruence has no solution");
}

LaurentPoly one_minus_t() { return LaurentPoly(0, {1, -1}); }

}  // namespace

LaurentPoly morton_alexander(int m, int p, int q) {
  if (m < 1 || p < 2 || q < 2) throw InvalidArgument("morton_alexander needs m >= 1 and p, q >= 2");
  if (std::gcd(p, q) != 1) throw Unsupported("morton_alexander needs gcd(p, q) = 1");
  const int u = solve_congruence(q, -1, p);
  const int v = solve_congruence(p, 1, q);
  const int a = p * v;
  const int b = (p - u) * q;

  LaurentPoly even_sum;  // 1 + t^2 + ... + t^{2m-2}
  for (int i = 0; i < m; ++i) even_sum += LaurentPoly::monomial(1, 2 * i);
  LaurentPoly bracket = LaurentPoly::constant(1) -
                        one_minus_t() * even_sum * (LaurentPoly::monomial(1, a) + LaurentPoly::monomial(1, b)) -
                        LaurentPoly::monomial(1, p * q + 2 * m);
  const LaurentPoly numerator = one_minus_t() * bracket;
  const LaurentPoly denominator = (LaurentPoly::monomial(1, p) - LaurentPoly::constant(1)) *
                                  (LaurentPoly::monomial(1, q) - LaurentPoly::constant(1));
  auto quotient = divide_exact(numerator, denominator);
  if (!quotient) throw InternalError("Morton formula division was not exact");
  return *quotient;
}

std::vector<LaurentPoly> reduced_burau(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) return {};
  const auto size = static_cast<std::size_t>(n - 1);
  std::vector<LaurentPoly> mat(size * size);
  for (std::size_t i = 0; i < size; ++i) mat[i * size + i] = LaurentPoly::constant(1);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  // Right multiplication by sigma_i only rewrites column i (1-based):
  // col_i <- t col_{i-1} - t col_i + col_{i+1}, missing neighbours dropped.
  for (int letter : w.letters()) {
    const auto c = static_cast<std::size_t>(letter - 1);
    for (std::size_t row = 0; row < size; ++row) {
      LaurentPoly entry = -(t * mat[row * size + c]);
      if (c > 0) entry += t * mat[row * size + c - 1];
      if (c + 1 < size) entry += mat[row * size + c + 1];
      mat[row * size + c] = std::move(entry);
    }
  }
  return mat;
}

LaurentPoly determinant(std::vector<LaurentPoly> a, std::size_t size) {
  if (a.size() != size * size) throw InvalidArgument("determinant: matrix size mismatch");
  if (size == 0) return LaurentPoly::constant(1);
  LaurentPoly previous = LaurentPoly::constant(1);
  bool negate = false;
  auto at = [&](std::size_t r, std::size_t c) -> LaurentPoly& { return a[r * size + c]; };
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && at(pivot, k).is_zero()) ++pivot;
      if (pivot == size) return {};
      for (std::size_t c = 0; c < size; ++c) std::swap(at(k, c), at(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        auto q = divide_exact(at(k, k) * at(i, j) - at(i, k) * at(k, j), previous);
        if (!q) throw InternalError("Bareiss step was not exact");
        at(i, j) = std::move(*q);
      }
      at(i, k) = {};
    }
    previous = at(k, k);
  }
  LaurentPoly det = at(size - 1, size - 1);
  return negate ? -det : det;
}

LaurentPoly burau_alexander(const BraidWord& w, BurauLimits limits) {
  const int n = w.strands();
  if (n > limits.max_strands || w.length() > limits.max_length) {
    throw Unsupported("word too large for the Burau oracle (" + std::to_string(n) + " strands, " +
                      std::to_string(w.length()) + " letters)");
  }
  if (cycle_count(permutation_of_word(w)) != 1) throw Unsupported("Burau oracle handles knots only");
  if (n == 1) return LaurentPoly::constant(1);
  const auto size = static_cast<std::size_t>(n - 1);
  auto mat = reduced_burau(w);
  for (auto& entry : mat) entry = -entry;
  for (std::size_t i = 0; i < size; ++i) mat[i * size + i] += LaurentPoly::constant(1);
  const LaurentPoly det = determinant(std::move(mat), size);
  LaurentPoly geometric;
  for (int i = 0; i < n; ++i) geometric += LaurentPoly::monomial(1, i);
  auto delta = divide_exact(det, geometric);
  if (!delta) throw InternalError("Burau determinant not divisible by 1 + t + ... + t^(n-1)");
  return *delta;
}

}  // namespace lorenz
