#pragma once

// Link invariants of Lorenz links that follow from their closed positive
// braid representations, plus Alexander polynomials.

#include <array>
#include <cstddef>

#include "lorenz/braid_word.hpp"
#include "lorenz/laurent.hpp"
#include "lorenz/lorenz_vector.hpp"
#include "lorenz/milestones.hpp"

namespace lorenz {

struct InvariantReport {
  bool unknot = false;
  int trip = 1;
  int components = 1;     // mu
  long long genus = 0;    // g, from 2g = c - n + 2 - mu
  long long unknotting = 0;  // u = g + mu - 1
  long long excess = 0;   // c - n, shared by every positive representation
  std::array<MilestoneEntry, 4> milestones{};
  long long min_crossings = 0;  // crossings of the minimal braid index word
  /// 2 mindeg V = 2g + mu - 1 = c - n + 1 = maxdeg Delta.
  long long predicted_degree = 0;
  long long crossing_bound = 0;  // 4g + 2mu - 2
  bool crossing_bound_holds = true;  // T-braid: c = 2g + mu + n - 2 <= bound

  bool operator==(const InvariantReport&) const = default;
};

/// Requires a normalized vector; every milestone must give the same genus.
InvariantReport invariant_report(const LorenzVector& v);
InvariantReport unknot_report();

/// Alexander polynomial of T((2,2m),(p,q)) for coprime p, q, by exact division.
LaurentPoly morton_alexander(int m, int p, int q);

struct BurauLimits {
  int max_strands = 10;
  std::size_t max_length = 60;
};

/// Reduced Burau matrix of a positive word, row-major (n-1) x (n-1).
std::vector<LaurentPoly> reduced_burau(const BraidWord& w);

/// Determinant by fraction-free (Bareiss) elimination over Z[t].
LaurentPoly determinant(std::vector<LaurentPoly> matrix, std::size_t size);

/// Delta(t) of the closure (a knot) up to units:
/// det(I - burau(w)) / (1 + t + ... + t^{n-1}).
LaurentPoly burau_alexander(const BraidWord& w, BurauLimits limits = {});

}  // namespace lorenz
