#pragma once

// Left-greedy (Garside) normal form of positive braids.
//
// A positive braid factors uniquely as A_1 A_2 ... A_k where every A_j is a
// non-trivial permutation braid (any two strands cross at most once) and
// every adjacent pair is left-weighted: no generator can be moved from the
// front of A_{j+1} to the end of A_j with A_j staying a permutation braid.
// Factors are stored as permutations.

#include <cstddef>
#include <span>
#include <vector>

#include "lorenz/braid_word.hpp"

namespace lorenz {

class CanonicalFactor {
 public:
  explicit CanonicalFactor(Permutation p) : perm_(std::move(p)) {}

  static CanonicalFactor generator(int strands, int letter);
  /// The half twist: every pair of strands crosses once.
  static CanonicalFactor delta(int strands);

  const Permutation& permutation() const noexcept { return perm_; }
  int strands() const noexcept { return perm_.size(); }
  long long length() const noexcept { return perm_.inversions(); }
  bool is_identity() const noexcept { return perm_.is_identity(); }
  bool is_delta() const noexcept;
  BraidWord word() const { return permutation_braid_word(perm_); }

  bool operator==(const CanonicalFactor&) const = default;

 private:
  Permutation perm_;
};

class NormalForm {
 public:
  explicit NormalForm(int strands);

  int strands() const noexcept { return strands_; }
  std::span<const CanonicalFactor> factors() const noexcept { return factors_; }
  std::size_t letter_count() const noexcept;

  /// Right-multiply by a permutation braid, restoring left-weightedness with
  /// one right-to-left sweep.
  void multiply(const CanonicalFactor& factor);
  void multiply(const NormalForm& other);

  BraidWord to_word() const;

  bool operator==(const NormalForm&) const = default;

 private:
  int strands_;
  std::vector<CanonicalFactor> factors_;
};

/// True when no generator at the front of `right` can be moved onto the end
/// of `left` with `left` staying a permutation braid.
bool is_left_weighted(const CanonicalFactor& left, const CanonicalFactor& right);

NormalForm normal_form(const BraidWord& w);
NormalForm power(const NormalForm& nf, int k);

bool words_equal(const BraidWord& a, const BraidWord& b);

/// delta^q with delta = [1,t].
BraidWord periodic_word(int t, int q);

}  // namespace lorenz
