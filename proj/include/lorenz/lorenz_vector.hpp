#pragma once

// Lorenz vectors <d_1, ..., d_p>: the displacements of the overcrossing
// strands of a Lorenz braid on p + d_p strands.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lorenz/braid_word.hpp"

namespace lorenz {

struct RunLength {
  int value;  // r_i
  int count;  // s_i
  bool operator==(const RunLength&) const = default;
};

class LorenzVector {
 public:
  LorenzVector() = default;
  /// Entries must be positive and nondecreasing.
  explicit LorenzVector(std::vector<int> displacements);
  static LorenzVector from_runs(std::span<const RunLength> runs);

  std::span<const int> entries() const noexcept { return d_; }
  int p() const noexcept { return static_cast<int>(d_.size()); }
  /// 1-based access, matching d_i.
  int d(int i) const { return d_.at(static_cast<std::size_t>(i - 1)); }
  int last() const { return d_.back(); }
  /// p + d_p, the strand count of the Lorenz braid.
  int braid_strands() const { return p() + last(); }
  /// S = sum of d_i, the crossing count of the Lorenz braid.
  long long crossing_sum() const noexcept;

  std::vector<RunLength> runs() const;

  /// 2 <= d_1, d_{p-1} = d_p and p >= 2.
  bool is_normalized() const noexcept;

  bool operator==(const LorenzVector&) const = default;

 private:
  std::vector<int> d_;
};

struct ParsedVector {
  LorenzVector vector;
  std::vector<std::string> warnings;
};

/// Accepts "r^s" and "r" terms separated by commas, e.g. "2^4,3^2,6,8^2".
/// Out-of-order terms are sorted and reported in `warnings`.
ParsedVector parse_vector(std::string_view text);
/// Canonical run-length text, e.g. "2^4,3^2,6,8^2".
std::string format_vector(const LorenzVector& v);

/// Result of destabilizing: either a normalized vector or the unknot.
struct NormalizeResult {
  std::optional<LorenzVector> vector;  // empty means unknot
  int left_moves = 0;
  int right_moves = 0;
  bool is_unknot() const noexcept { return !vector.has_value(); }
};

NormalizeResult normalize(const LorenzVector& v);

/// pi(i) = i + d_i on the left strands; the right strands fill the remaining
/// end positions in increasing order. 0-based positions.
Permutation lorenz_permutation(const LorenzVector& v);
BraidWord lorenz_braid_word(const LorenzVector& v);

int trip_number(const LorenzVector& v);

enum class StrandType { LL, LR, RL, RR };

struct StrandClassification {
  std::vector<StrandType> types;  // indexed by 0-based start position
  int ll = 0, lr = 0, rl = 0, rr = 0;
};

StrandClassification classify_strands(const LorenzVector& v);

/// Image of the braid under the pi-rotation of the template.
LorenzVector dual_vector(const LorenzVector& v);

struct TmTriple {
  int t = 0;
  std::vector<int> n;  // n_1 .. n_{t-1}
  std::vector<int> m;  // m_1 .. m_{t-1}
  bool operator==(const TmTriple&) const = default;
};

TmTriple tm_triple(const LorenzVector& v);

/// Inverse of tm_triple: rebuilds the unique Lorenz vector of a triple.
LorenzVector vector_from_triple(const TmTriple& triple);

/// [1,t]^t * prod [1,i+1]^{n_i} * prod [t,t-i]^{m_i} on t strands.
BraidWord minimal_braid_word(const TmTriple& triple);
BraidWord minimal_braid_word(const LorenzVector& v);

}  // namespace lorenz
