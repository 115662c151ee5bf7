#pragma once

// Integer Laurent polynomials in one variable t. Arithmetic is exact and
// throws std::overflow_error instead of wrapping.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lorenz {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// coeffs[i] is the coefficient of t^(low + i).
  LaurentPoly(int low, std::vector<std::int64_t> coeffs);
  static LaurentPoly constant(std::int64_t c) { return LaurentPoly(0, {c}); }
  static LaurentPoly monomial(std::int64_t c, int exponent) { return LaurentPoly(exponent, {c}); }
  static LaurentPoly from_terms(const std::map<int, std::int64_t>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_degree() const noexcept { return low_; }
  int max_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const noexcept { return is_zero() ? 0 : max_degree() - min_degree(); }
  std::int64_t coeff(int exponent) const noexcept;
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
  std::map<int, std::int64_t> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Exact quotient a / b, or nullopt when b does not divide a in Z[t, 1/t].
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Shift to min degree 0 and make the lowest coefficient positive.
LaurentPoly normalize_units(const LaurentPoly& a);
bool poly_equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// Ascending exponents, e.g. "1 - t + t^2" or "-2*t^-1 + 3".
std::string to_string(const LaurentPoly& a);

}  // namespace lorenz
