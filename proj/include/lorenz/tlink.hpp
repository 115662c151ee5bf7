#pragma once

// T-links T((r_1,s_1),...,(r_k,s_k)): closures of the positive braids
// prod (sigma_1 ... sigma_{r_i - 1})^{s_i}, and their correspondence with
// Lorenz vectors.

#include <string>
#include <string_view>
#include <vector>

#include "lorenz/braid_word.hpp"
#include "lorenz/lorenz_vector.hpp"

namespace lorenz {

struct TwistPair {
  int r;  // strands twisted
  int s;  // number of passes
  bool operator==(const TwistPair&) const = default;
};

class TParams {
 public:
  TParams() = default;
  /// Requires 2 <= r_1 <= ... <= r_k and every s_i >= 1.
  explicit TParams(std::vector<TwistPair> pairs);

  std::span<const TwistPair> pairs() const noexcept { return pairs_; }
  std::size_t k() const noexcept { return pairs_.size(); }
  int max_strands() const { return pairs_.back().r; }

  /// Adjacent pairs with equal r merged (s added), so r is strictly increasing.
  TParams canonical() const;
  bool is_canonical() const noexcept;

  bool operator==(const TParams&) const = default;

 private:
  std::vector<TwistPair> pairs_;
};

/// "(r,s)(r,s)..." ; pairs are sorted by r, so any order is accepted.
TParams parse_tparams(std::string_view text);
std::string format_tparams(const TParams& t);

BraidWord tbraid_word(const TParams& t);

TParams vector_to_tparams(const LorenzVector& v);
LorenzVector tparams_to_vector(const TParams& t);

/// Word pieces of the Lorenz-to-T-braid reduction, all on d_p strands:
/// X = prod_{i<=p-t} [1,d_i], Y = [1,t]^t, Z = Z_t Z_{t-1} ... Z_1 with
/// Z_{t-i} = [t-i, d_{p-i}-i] (empty when d_{p-i} = t).
BraidWord x_word(const LorenzVector& v);
BraidWord y_word(const LorenzVector& v);
BraidWord z_word(const LorenzVector& v);
/// prod_{i=p-t+1}^{p} [1,d_i], the right-hand side of the Y*Z identity.
BraidWord yz_target_word(const LorenzVector& v);

TParams dual_tparams(const TParams& t);

/// Braid index from the pairs alone, via the first index where r_i reaches
/// the dual partial sums (and symmetrically on the dual side).
int braid_index(const TParams& t);
/// The closed forms for k = 1 and k = 2. Throws for k > 2.
int braid_index_small_k(const TParams& t);

struct TorusRewrite {
  TParams result;
  bool applied = false;
};

/// When r_{k-1} <= s_k and r_i | s_i for i < k, replaces (r_k, s_k) by
/// (s_k, r_k) and re-canonicalizes. Needs k >= 2.
TorusRewrite torus_simplify(const TParams& t);
/// Repeats torus_simplify until it stops applying or revisits a state;
/// returns the visited state with the fewest pairs (then smallest r_k).
TParams torus_simplify_all(const TParams& t);

}  // namespace lorenz
