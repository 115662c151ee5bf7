#pragma once

// Positive braid words and strand permutations.
//
// Conventions used throughout the library:
//   * A letter i (1 <= i <= n-1) is the positive generator sigma_i. It swaps
//     the strands currently at positions i and i+1 (1-based).
//   * Words are read left to right, which is top to bottom in the diagram.
//   * Permutation positions are 0-based: perm[a] is the final position of the
//     strand that starts at position a.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorenz {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator[](int a) const { return image_[static_cast<std::size_t>(a)]; }
  std::span<const int> image() const noexcept { return image_; }

  Permutation inverse() const;
  /// Apply `*this` first, then `next`: result[a] = next[(*this)[a]].
  Permutation then(const Permutation& next) const;

  bool is_identity() const noexcept;
  long long inversions() const noexcept;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Number of cycles; for the permutation of a braid this is the number of
/// components of its closure.
int cycle_count(const Permutation& p);

class BraidWord {
 public:
  BraidWord() = default;
  /// Throws InvalidArgument when strands < 1 or a letter is outside [1, strands-1].
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// [v,w]: sigma_v ... sigma_{w-1} when v < w, sigma_{v-1} ... sigma_w when v > w.
BraidWord bracket(int v, int w, int strands);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& a, int k);

/// Cyclic rotation: the word starting at letter `offset`.
BraidWord rotate(const BraidWord& w, std::size_t offset);

Permutation permutation_of_word(const BraidWord& w);

/// Conjugation by the half twist on the letters: i -> n - i.
BraidWord flip_word(const BraidWord& w);

/// Reduced positive word of the permutation braid of `p`. Built by insertion:
/// strands are taken in increasing start position and moved left past every
/// strand that must end to their right, emitting descending runs.
BraidWord permutation_braid_word(const Permutation& p);

/// Text form: "n=<strands>" followed by whitespace-separated letters.
std::string format_word(const BraidWord& w);
BraidWord parse_word(std::string_view text);

}  // namespace lorenz
