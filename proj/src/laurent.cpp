#include "qsc/laurent.hpp"

#include "qsc/expr_parse.hpp"
#include "qsc/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsc {

namespace {

Integer igcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

std::uint64_t residue(const Integer& c, std::uint64_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

// Dense polynomials over Z with index = exponent, used by gcd.
using Dense = std::vector<Integer>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Integer dense_content(const Dense& a) {
  Integer g = 0;
  for (const auto& c : a) {
    g = igcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& a) {
  Integer g = dense_content(a);
  if (g > 1)
    for (auto& c : a) c /= g;
}

// Pseudo-remainder of a by b (deg b >= 0).
Dense prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) {
  LaurentPoly r(c);
  if (!r.is_zero()) r.lo_ = exp;
  return r;
}

LaurentPoly LaurentPoly::q_pow(int exp) { return monomial(1, exp); }

LaurentPoly LaurentPoly::neg_q_pow(int exp) { return monomial((exp % 2 == 0) ? 1 : -1, exp); }

bool LaurentPoly::is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

int LaurentPoly::num_terms() const {
  int n = 0;
  for (const auto& c : c_) n += !c.is_zero();
  return n;
}

Integer LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < lo_ || exp > high()) return 0;
  return c_[exp - lo_];
}

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (k) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    lo_ += static_cast<int>(k);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(high(), o.high());
  if (lo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), Integer(0));
    lo_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo_ + 1) c_.resize(static_cast<std::size_t>(hi - lo_ + 1));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.lo_ - lo_ + i] += o.c_[i];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.add_product(a, b);
  return r;
}

void LaurentPoly::add_product(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return;
  int lo = f.lo_ + g.lo_;
  int hi = f.high() + g.high();
  if (is_zero()) {
    lo_ = lo;
  } else if (lo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), Integer(0));
    lo_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo_ + 1) c_.resize(static_cast<std::size_t>(hi - lo_ + 1));
  const std::size_t off = static_cast<std::size_t>(lo - lo_);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) c_[off + i + j] += f.c_[i] * g.c_[j];
  }
  normalize();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) return unit_inverse().pow(-n);
  LaurentPoly r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_monomial() || (c_[0] != 1 && c_[0] != -1))
    throw std::domain_error("LaurentPoly::unit_inverse: not a unit");
  return monomial(c_[0], -lo_);
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    g = igcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_by(const Integer& c) const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) {
    if (x % c != 0) throw std::domain_error("LaurentPoly::divided_by: inexact");
    x /= c;
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly::divide: division by zero");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    LaurentPoly r = *this;
    for (auto& x : r.c_) {
      if (x % d.c_[0] != 0) return std::nullopt;
      x /= d.c_[0];
    }
    r.lo_ -= d.lo_;
    return r;
  }
  if (c_.size() < d.c_.size()) return std::nullopt;
  Dense rem = c_;
  Dense quot(c_.size() - d.c_.size() + 1);
  const Integer& ld = d.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer top = rem[k + d.c_.size() - 1];
    if (top.is_zero()) continue;
    if (top % ld != 0) return std::nullopt;
    Integer f = top / ld;
    quot[k] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= f * d.c_[i];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return std::nullopt;
  LaurentPoly r;
  r.c_ = std::move(quot);
  r.lo_ = lo_ - d.lo_;
  r.normalize();
  return r;
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t q0, std::uint64_t p) const {
  q0 %= p;
  if (q0 == 0) throw std::domain_error("eval_mod: q must be invertible mod p");
  if (is_zero()) return 0;
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = modp::add(modp::mul(acc, q0, p), residue(c_[i], p), p);
  std::uint64_t base = lo_ >= 0 ? q0 : modp::inv(q0, p);
  std::uint64_t scale = modp::pow(base, static_cast<std::uint64_t>(lo_ >= 0 ? lo_ : -static_cast<long long>(lo_)), p);
  return modp::mul(acc, scale, p);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Integer& c = c_[i];
    if (c.is_zero()) continue;
    int e = lo_ + static_cast<int>(i);
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  ExprParser<LaurentPoly> p(text, [](std::string_view name, std::string_view) -> LaurentPoly {
    throw ParseError("unknown symbol '" + std::string(name) + "' in a coefficient");
  });
  return p.parse();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for_each_term([&](int e, const Integer& c) { j[std::to_string(e)] = c.str(); });
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly r;
  for (auto it = j.begin(); it != j.end(); ++it)
    r += monomial(Integer(it.value().get<std::string>().c_str()), std::stoi(it.key()));
  return r;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto to_dense = [](const LaurentPoly& x) {
    Dense d;
    if (x.is_zero()) return d;
    d.resize(static_cast<std::size_t>(x.high() - x.low() + 1));
    x.for_each_term([&](int e, const Integer& c) { d[static_cast<std::size_t>(e - x.low())] = c; });
    return d;
  };
  Dense x = to_dense(a), y = to_dense(b);
  Integer g = igcd(dense_content(x), dense_content(y));
  if (x.empty()) std::swap(x, y);
  make_primitive(x);
  if (!y.empty()) make_primitive(y);
  if (!y.empty() && y.size() > x.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = prem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  if (x.back() < 0)
    for (auto& c : x) c = -c;
  LaurentPoly out;
  for (std::size_t i = 0; i < x.size(); ++i) out += LaurentPoly::monomial(x[i] * g, static_cast<int>(i));
  return out;
}

LaurentPoly qint(int n) {
  if (n < 0) throw std::domain_error("qint: n must be nonnegative");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r += LaurentPoly::q_pow(n - 1 - 2 * k);
  return r;
}

LaurentPoly qhat() { return LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1); }

// RatFunc

RatFunc::RatFunc(const LaurentPoly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = gcd(num_, den_);
  num_ = *num_.divide(g);
  den_ = *den_.divide(g);
  int shift = -den_.low();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
  if (den_.is_one()) return num_;
  return std::nullopt;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

nlohmann::json RatFunc::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

}  // namespace qsc
