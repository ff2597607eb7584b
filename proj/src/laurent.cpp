#include "knotcert/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace knotcert {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return out;
}

int checked_exp_add(int a, int b) {
  int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("LaurentPoly: exponent overflow");
  return out;
}

// Shared formatter; `power` renders a single variable power for exponent e.
template <typename PowerFn>
std::string format_terms(const LaurentPoly::Terms& terms, PowerFn power) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [exponent, coefficient] = *it;
    std::string var = power(exponent);
    bool negative = coefficient < 0;
    // magnitude as unsigned to survive INT64_MIN
    std::uint64_t magnitude = negative ? 0 - static_cast<std::uint64_t>(coefficient)
                                       : static_cast<std::uint64_t>(coefficient);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (var.empty()) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude;
      out << var;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_[exponent] = coefficient;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t sum = 0;
  for (auto [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

void LaurentPoly::add_term(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (auto [e, c] : rhs.terms_) {
    if (c == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("LaurentPoly: coefficient overflow");
    add_term(e, -c);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (auto [e1, c1] : lhs.terms_)
    for (auto [e2, c2] : rhs.terms_) out.add_term(checked_exp_add(e1, e2), checked_mul(c1, c2));
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly() - *this; }

std::string LaurentPoly::to_string() const {
  return format_terms(terms_, [](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return "A";
    return "A^" + std::to_string(e);
  });
}

bool LaurentPoly::has_t_form() const {
  for (auto [e, c] : terms_)
    if (e % 4 != 0) return false;
  return true;
}

std::string LaurentPoly::to_t_string() const {
  if (!has_t_form()) throw std::domain_error("LaurentPoly: exponents are not multiples of 4");
  Terms in_t;
  for (auto [e, c] : terms_) in_t[-e / 4] = c;
  return format_terms(in_t, [](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
  });
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (auto [e, c] : terms_) coeffs[std::to_string(e)] = c;
  return nlohmann::json{{"A", coeffs}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (auto& [key, value] : j.at("A").items()) {
    std::size_t used = 0;
    int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("LaurentPoly: bad exponent key '" + key + "'");
    p.add_term(e, value.get<std::int64_t>());
  }
  return p;
}

const LaurentPoly& loop_value() {
  static const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  return delta;
}

}  // namespace knotcert
