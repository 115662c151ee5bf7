#include "lorenz/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lorenz {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int low, std::vector<std::int64_t> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, std::int64_t>& terms) {
  if (terms.empty()) return {};
  const int low = terms.begin()->first;
  const int high = terms.rbegin()->first;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(high - low + 1), 0);
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - low)] = c;
  return LaurentPoly(low, std::move(coeffs));
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t LaurentPoly::coeff(int exponent) const noexcept {
  if (is_zero() || exponent < low_ || exponent > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[low_ + static_cast<int>(i)] = coeffs_[i];
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int low = std::min(low_, other.low_);
  const int high = std::max(max_degree(), other.max_degree());
  std::vector<std::int64_t> sum(static_cast<std::size_t>(high - low + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(low_ - low) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = sum[static_cast<std::size_t>(other.low_ - low) + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  low_ = low;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] = checked_add(prod[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentPoly(a.low_ + b.low_, std::move(prod));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Long division from the top on the coefficient arrays.
  std::vector<std::int64_t> rem(a.coefficients().begin(), a.coefficients().end());
  const auto divisor = b.coefficients();
  if (rem.size() < divisor.size()) return std::nullopt;
  const std::int64_t lead = divisor.back();
  std::vector<std::int64_t> quot(rem.size() - divisor.size() + 1, 0);
  for (std::size_t q = quot.size(); q-- > 0;) {
    const std::int64_t top = rem[q + divisor.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const std::int64_t factor = top / lead;
    quot[q] = factor;
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      rem[q + j] = checked_add(rem[q + j], -checked_mul(factor, divisor[j]));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) return std::nullopt;
  return LaurentPoly(a.min_degree() - b.min_degree(), std::move(quot));
}

LaurentPoly normalize_units(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  LaurentPoly out = a.shifted(-a.min_degree());
  if (out.coeff(0) < 0) out = -out;
  return out;
}

bool poly_equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize_units(a) == normalize_units(b);
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace lorenz
