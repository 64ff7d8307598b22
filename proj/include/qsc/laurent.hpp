#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

using Integer = boost::multiprecision::cpp_int;

// Laurent polynomial in q with big-integer coefficients, stored densely
// from the lowest nonzero exponent. The zero polynomial has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Integer& c, int exp);
  static LaurentPoly q_pow(int exp);
  static LaurentPoly neg_q_pow(int exp);  // (-q)^exp

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_one() const;
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  int num_terms() const;
  Integer coeff(int exp) const;
  const Integer& lead() const { return c_.back(); }
  const Integer& trail() const { return c_.front(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // this += f * g without a temporary for the product.
  void add_product(const LaurentPoly& f, const LaurentPoly& g);

  LaurentPoly shifted(int k) const;  // q^k * this
  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly pow(int n) const;      // n >= 0, or n < 0 for monomials
  // Inverse of a unit +-q^k; throws for anything else.
  LaurentPoly unit_inverse() const;

  Integer content() const;  // positive gcd of coefficients, 0 for zero
  LaurentPoly divided_by(const Integer& c) const;  // exact
  // Exact quotient in Z[q, q^-1]; nullopt when the division is not exact.
  std::optional<LaurentPoly> divide(const LaurentPoly& d) const;

  // Value at q = q0 modulo p. q0 must be invertible mod p.
  std::uint64_t eval_mod(std::uint64_t q0, std::uint64_t p) const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

  // Term-wise access: visits (exponent, coefficient) for nonzero terms.
  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) f(lo_ + static_cast<int>(i), c_[i]);
  }

 private:
  void normalize();

  int lo_ = 0;
  std::vector<Integer> c_;
};

// gcd in Z[q, q^-1], normalized to lowest exponent 0 and positive leading
// coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly qint(int n);
LaurentPoly qhat();

// Canonical quotient of Laurent polynomials.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const LaurentPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // The value as a Laurent polynomial, when the denominator is a unit.
  std::optional<LaurentPoly> as_laurent() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qsc
