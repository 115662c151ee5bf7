#include "lorenz/garside.hpp"

#include <algorithm>

#include "lorenz/errors.hpp"

namespace lorenz {

namespace {

using Image = std::vector<int>;

Image inverse_image(std::span<const int> image) {
  Image inv(image.size());
  for (std::size_t a = 0; a < image.size(); ++a) inv[static_cast<std::size_t>(image[a])] = static_cast<int>(a);
  return inv;
}

// Position i can move from the front of B to the end of A when the strands
// starting at i, i+1 cross in B and the strands ending at i, i+1 in A do not.
bool movable(const Image& left_inv, const Image& right, std::size_t i) {
  return right[i] > right[i + 1] && left_inv[i] < left_inv[i + 1];
}

// Pushes generators from `right` into `left` until the pair is left-weighted.
bool left_weight(Image& left, Image& left_inv, Image& right) {
  bool moved = false;
  std::size_t i = 0;
  while (i + 1 < right.size()) {
    if (!movable(left_inv, right, i)) {
      ++i;
      continue;
    }
    // left <- left * sigma_i, right <- sigma_i^{-1} * right
    std::swap(left_inv[i], left_inv[i + 1]);
    left[static_cast<std::size_t>(left_inv[i])] = static_cast<int>(i);
    left[static_cast<std::size_t>(left_inv[i + 1])] = static_cast<int>(i + 1);
    std::swap(right[i], right[i + 1]);
    moved = true;
    i = i > 0 ? i - 1 : 0;
  }
  return moved;
}

}  // namespace

CanonicalFactor CanonicalFactor::generator(int strands, int letter) {
  if (letter < 1 || letter >= strands) throw InvalidArgument("generator index out of range");
  Image image(static_cast<std::size_t>(strands));
  for (int a = 0; a < strands; ++a) image[static_cast<std::size_t>(a)] = a;
  std::swap(image[static_cast<std::size_t>(letter - 1)], image[static_cast<std::size_t>(letter)]);
  return CanonicalFactor(Permutation(std::move(image)));
}

CanonicalFactor CanonicalFactor::delta(int strands) {
  Image image(static_cast<std::size_t>(strands));
  for (int a = 0; a < strands; ++a) image[static_cast<std::size_t>(a)] = strands - 1 - a;
  return CanonicalFactor(Permutation(std::move(image)));
}

bool CanonicalFactor::is_delta() const noexcept {
  const int n = perm_.size();
  for (int a = 0; a < n; ++a) {
    if (perm_[a] != n - 1 - a) return false;
  }
  return true;
}

bool is_left_weighted(const CanonicalFactor& left, const CanonicalFactor& right) {
  if (left.strands() != right.strands()) throw InvalidArgument("factor strand counts differ");
  Image left_inv = inverse_image(left.permutation().image());
  Image r(right.permutation().image().begin(), right.permutation().image().end());
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (movable(left_inv, r, i)) return false;
  }
  return true;
}

NormalForm::NormalForm(int strands) : strands_(strands) {
  if (strands < 1) throw InvalidArgument("normal form needs at least one strand");
}

std::size_t NormalForm::letter_count() const noexcept {
  std::size_t total = 0;
  for (const auto& f : factors_) total += static_cast<std::size_t>(f.length());
  return total;
}

void NormalForm::multiply(const CanonicalFactor& factor) {
  if (factor.strands() != strands_) throw InvalidArgument("factor strand count differs");
  if (factor.is_identity()) return;
  factors_.push_back(factor);
  for (std::size_t j = factors_.size() - 1; j > 0; --j) {
    const auto& a = factors_[j - 1].permutation().image();
    const auto& b = factors_[j].permutation().image();
    Image left(a.begin(), a.end());
    Image left_inv = inverse_image(a);
    Image right(b.begin(), b.end());
    if (!left_weight(left, left_inv, right)) break;
    factors_[j - 1] = CanonicalFactor(Permutation(std::move(left)));
    factors_[j] = CanonicalFactor(Permutation(std::move(right)));
  }
  // Only the last factor can have been emptied by the sweep.
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

void NormalForm::multiply(const NormalForm& other) {
  if (other.strands_ != strands_) throw InvalidArgument("normal form strand counts differ");
  for (const auto& f : other.factors_) multiply(f);
}

BraidWord NormalForm::to_word() const {
  BraidWord w(strands_, {});
  for (const auto& f : factors_) w = concat(w, f.word());
  return w;
}

NormalForm normal_form(const BraidWord& w) {
  NormalForm nf(w.strands());
  for (int letter : w.letters()) nf.multiply(CanonicalFactor::generator(w.strands(), letter));
  return nf;
}

NormalForm power(const NormalForm& nf, int k) {
  if (k < 0) throw InvalidArgument("power: negative exponent");
  NormalForm result(nf.strands());
  for (int i = 0; i < k; ++i) result.multiply(nf);
  return result;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InvalidArgument("words_equal: strand counts differ");
  if (a.length() != b.length()) return false;
  return normal_form(a) == normal_form(b);
}

BraidWord periodic_word(int t, int q) {
  if (t < 2) throw InvalidArgument("periodic_word needs t >= 2");
  if (q < 0) throw InvalidArgument("periodic_word needs q >= 0");
  return power(bracket(1, t, t), q);
}

}  // namespace lorenz
