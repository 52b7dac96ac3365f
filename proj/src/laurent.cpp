#include "jslope/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dense_poly.hpp"
#include "jslope/error.hpp"

namespace jslope {

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

LaurentPoly::Exponent LaurentPoly::max_deg() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  return terms_.back().exponent;
}

LaurentPoly::Exponent LaurentPoly::min_deg() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  return terms_.front().exponent;
}

const Integer& LaurentPoly::leading_coeff() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has no leading coefficient");
  return terms_.back().coeff;
}

const Integer& LaurentPoly::trailing_coeff() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has no trailing coefficient");
  return terms_.front().coeff;
}

Integer LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

bool LaurentPoly::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

LaurentPoly LaurentPoly::shifted(Exponent e, int sign) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    t.exponent += e;
    if (sign < 0) t.coeff = -t.coeff;
  }
  return p;
}

std::string LaurentPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (first) {
      os << it->coeff.get_str();
    } else if (it->coeff < 0) {
      os << " - " << Integer(-it->coeff).get_str();
    } else {
      os << " + " << it->coeff.get_str();
    }
    os << "*v^" << it->exponent;
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse_text(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "malformed polynomial text: " + text); };
  while (pos < s.size()) {
    std::size_t star = s.find("*v^", pos);
    if (star == std::string::npos) bad();
    std::string coeff = s.substr(pos, star - pos);
    // A separator '+' or '-' may start a term after the first.
    if (!coeff.empty() && coeff[0] == '+') coeff.erase(0, 1);
    std::size_t exp_begin = star + 3;
    std::size_t exp_end = exp_begin;
    if (exp_end < s.size() && s[exp_end] == '-') ++exp_end;
    while (exp_end < s.size() && std::isdigit(static_cast<unsigned char>(s[exp_end]))) ++exp_end;
    if (coeff.empty() || exp_end == exp_begin) bad();
    Integer c;
    if (c.set_str(coeff, 10) != 0) bad();
    terms.push_back({std::stoll(s.substr(exp_begin, exp_end - exp_begin)), c});
    pos = exp_end;
  }
  return from_terms(std::move(terms));
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  auto& r = out.terms_;
  r.reserve(p.terms_.size() + q.terms_.size());
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end() || (i != p.terms_.end() && i->exponent < j->exponent)) {
      r.push_back(*i++);
    } else if (i == p.terms_.end() || j->exponent < i->exponent) {
      r.push_back(*j++);
    } else {
      Integer c = i->coeff + j->coeff;
      if (c != 0) r.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& p) { return p.shifted(0, -1); }

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto pmin = p.min_deg();
  const auto qmin = q.min_deg();
  std::int64_t stride = std::gcd(detail::exponent_stride(p), detail::exponent_stride(q));
  if (stride == 0) stride = 1;
  const auto span = (p.max_deg() - pmin + q.max_deg() - qmin) / stride;
  std::vector<Integer> buf(static_cast<std::size_t>(span + 1));
  for (const auto& a : p.terms_) {
    const auto ia = (a.exponent - pmin) / stride;
    for (const auto& b : q.terms_) {
      const auto idx = static_cast<std::size_t>(ia + (b.exponent - qmin) / stride);
      mpz_addmul(buf[idx].get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  }
  return detail::from_dense(buf, pmin + qmin, stride);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) { return *this = *this + q; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) { return *this = *this * q; }

Integer evaluate_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& t : p.terms()) sum += t.coeff;
  return sum;
}

LaurentPoly qint(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "quantum integer of negative argument " + std::to_string(k));
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < k; ++i) terms.push_back({2 * k - 2 - 4 * i, 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfact(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "quantum factorial of negative argument " + std::to_string(k));
  static std::mutex mu;
  static std::deque<LaurentPoly> memo{LaurentPoly::constant(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(memo.size()) <= k) {
    const int next = static_cast<int>(memo.size());
    memo.push_back(memo.back() * qint(next));
  }
  return memo[static_cast<std::size_t>(k)];
}

LaurentPoly qmultinom(std::span<const int> parts) {
  int total = 0;
  for (int part : parts) {
    if (part < 0) fail(ErrorKind::InvalidArgument, "negative multinomial part " + std::to_string(part));
    total += part;
  }
  LaurentPoly denom = LaurentPoly::constant(1);
  for (int part : parts) {
    if (part > 1) denom *= qfact(part);
  }
  return exact_div(qfact(total), denom);
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  return qmultinom({k, n - k});
}

bool try_exact_div(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly* quotient) {
  if (q.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (p.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  std::int64_t stride = std::gcd(detail::exponent_stride(p), detail::exponent_stride(q));
  if (stride == 0) stride = 1;
  const auto pd = detail::to_dense(p, stride);
  const auto qd = detail::to_dense(q, stride);
  detail::Coeffs out;
  if (!detail::divide_exact(pd.coeffs, qd.coeffs, quotient ? &out : nullptr)) return false;
  if (quotient) *quotient = detail::from_dense(out, pd.shift - qd.shift, stride);
  return true;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  if (!try_exact_div(p, q, &out)) {
    fail(ErrorKind::NonExactDivision, "(" + p.to_text() + ") / (" + q.to_text() + ") leaves a remainder");
  }
  return out;
}

LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) return {};
  std::int64_t stride = std::gcd(detail::exponent_stride(p), detail::exponent_stride(q));
  if (stride == 0) stride = 1;
  const auto g = detail::modular_gcd(detail::to_dense(p, stride).coeffs, detail::to_dense(q, stride).coeffs);
  return detail::from_dense(g, 0, stride);
}

PolyFraction::PolyFraction(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}

PolyFraction::PolyFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "fraction with zero denominator");
}

bool PolyFraction::equals(const PolyFraction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

PolyFraction frac_add(const PolyFraction& x, const PolyFraction& y) {
  if (x.denominator() == y.denominator()) return {x.numerator() + y.numerator(), x.denominator()};
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const LaurentPoly g = poly_gcd(x.denominator(), y.denominator());
  const LaurentPoly xs = exact_div(y.denominator(), g);
  const LaurentPoly ys = exact_div(x.denominator(), g);
  return {x.numerator() * xs + y.numerator() * ys, x.denominator() * xs};
}

PolyFraction frac_mul(const PolyFraction& x, const PolyFraction& y) {
  return {x.numerator() * y.numerator(), x.denominator() * y.denominator()};
}

PolyFraction frac_reduce(const PolyFraction& x) {
  if (x.is_zero()) return PolyFraction(LaurentPoly{});
  const LaurentPoly g = poly_gcd(x.numerator(), x.denominator());
  LaurentPoly num = exact_div(x.numerator(), g);
  LaurentPoly den = exact_div(x.denominator(), g);
  const int sign = den.leading_coeff() < 0 ? -1 : 1;
  const auto centre = den.max_deg() + den.min_deg();
  // floor(centre / 2)
  const auto e = (centre >= 0 ? centre : centre - 1) / 2;
  return {num.shifted(-e, sign), den.shifted(-e, sign)};
}

LaurentPoly frac_to_poly(const PolyFraction& x) {
  const PolyFraction r = frac_reduce(x);
  if (!r.denominator().is_unit()) {
    fail(ErrorKind::NotPolynomial, "denominator " + r.denominator().to_text() + " is not a unit");
  }
  const auto& t = r.denominator().terms().front();
  return r.numerator().shifted(-t.exponent, t.coeff < 0 ? -1 : 1);
}

}  // namespace jslope
