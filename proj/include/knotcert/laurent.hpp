#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace knotcert {

/// Integer Laurent polynomial in the single variable A.
///
/// Only nonzero coefficients are stored, so two polynomials are equal
/// exactly when their term maps are equal. Arithmetic is done on 64-bit
/// coefficients with overflow checks; an overflow throws
/// std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: implicit from integers is intended

  static LaurentPoly monomial(std::int64_t coefficient, int exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::int64_t coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// A -> A^-1.
  LaurentPoly mirrored() const;

  /// Value at A = 1.
  std::int64_t at_one() const;

  LaurentPoly pow(unsigned n) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "-A^5 - A^-3 + A^-7": descending exponents, unit coefficients elided.
  std::string to_string() const;

  /// Same polynomial rewritten in t = A^-4. Requires every exponent to be a
  /// multiple of 4; throws std::domain_error otherwise.
  std::string to_t_string() const;
  bool has_t_form() const;

  /// {"A": {"5": -1, "-3": -1, "-7": 1}}
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void add_term(int exponent, std::int64_t coefficient);

  Terms terms_;
};

/// delta = -A^2 - A^-2, the value of a disjoint extra loop.
const LaurentPoly& loop_value();

}  // namespace knotcert
