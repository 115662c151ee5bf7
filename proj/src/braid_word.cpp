#include "lorenz/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "lorenz/errors.hpp"

namespace lorenz {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("permutation image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidArgument("negative permutation size");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t a = 0; a < image_.size(); ++a) {
    inv[static_cast<std::size_t>(image_[a])] = static_cast<int>(a);
  }
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw InvalidArgument("permutation sizes differ");
  std::vector<int> out(image_.size());
  for (std::size_t a = 0; a < image_.size(); ++a) {
    out[a] = next.image_[static_cast<std::size_t>(image_[a])];
  }
  Permutation p;
  p.image_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t a = 0; a < image_.size(); ++a) {
    if (image_[a] != static_cast<int>(a)) return false;
  }
  return true;
}

long long Permutation::inversions() const noexcept {
  // Sizes here are braid strand counts, so the quadratic count is fine.
  long long count = 0;
  for (std::size_t a = 0; a < image_.size(); ++a) {
    for (std::size_t b = a + 1; b < image_.size(); ++b) {
      if (image_[a] > image_[b]) ++count;
    }
  }
  return count;
}

int cycle_count(const Permutation& p) {
  std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
  int cycles = 0;
  for (int a = 0; a < p.size(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ++cycles;
    for (int b = a; !seen[static_cast<std::size_t>(b)]; b = p[b]) {
      seen[static_cast<std::size_t>(b)] = 1;
    }
  }
  return cycles;
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidArgument("braid must have at least one strand");
  for (int letter : letters_) {
    if (letter < 1 || letter > strands_ - 1) {
      throw InvalidArgument("generator index " + std::to_string(letter) +
                            " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord bracket(int v, int w, int strands) {
  if (v < 1 || w < 1 || v > strands || w > strands) {
    throw InvalidArgument("bracket index out of range");
  }
  if (v == w) throw InvalidArgument("bracket [v,w] needs v != w");
  std::vector<int> letters;
  if (v < w) {
    for (int i = v; i < w; ++i) letters.push_back(i);
  } else {
    for (int i = v - 1; i >= w; --i) letters.push_back(i);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InvalidArgument("concat: strand counts differ");
  std::vector<int> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& a, int k) {
  if (k < 0) throw InvalidArgument("power: negative exponent");
  std::vector<int> letters;
  letters.reserve(a.length() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) letters.insert(letters.end(), a.letters().begin(), a.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord rotate(const BraidWord& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.length();
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(offset), letters.end());
  return BraidWord(w.strands(), std::move(letters));
}

Permutation permutation_of_word(const BraidWord& w) {
  // at[pos] = starting position of the strand currently at pos
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (int letter : w.letters()) {
    std::swap(at[static_cast<std::size_t>(letter - 1)], at[static_cast<std::size_t>(letter)]);
  }
  return Permutation(std::move(at)).inverse();
}

BraidWord flip_word(const BraidWord& w) {
  std::vector<int> letters;
  letters.reserve(w.length());
  for (int letter : w.letters()) letters.push_back(w.strands() - letter);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord permutation_braid_word(const Permutation& p) {
  // label[pos] = final position of the strand currently at pos; insertion sort
  // on the labels swaps each inverted pair exactly once.
  std::vector<int> label(p.image().begin(), p.image().end());
  std::vector<int> letters;
  for (std::size_t a = 1; a < label.size(); ++a) {
    for (std::size_t pos = a; pos > 0 && label[pos - 1] > label[pos]; --pos) {
      std::swap(label[pos - 1], label[pos]);
      letters.push_back(static_cast<int>(pos));
    }
  }
  return BraidWord(std::max(p.size(), 1), std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::ostringstream out;
  out << "n=" << w.strands();
  for (int letter : w.letters()) out << ' ' << letter;
  return out.str();
}

namespace {

int parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

BraidWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token) || token.rfind("n=", 0) != 0) {
    throw ParseError("braid word must start with n=<strands>");
  }
  int strands = parse_int(std::string_view(token).substr(2));
  std::vector<int> letters;
  while (in >> token) letters.push_back(parse_int(token));
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace lorenz
