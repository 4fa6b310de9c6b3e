#include "nct/modular/closed_form.hpp"

#include <cmath>
#include <sstream>

namespace nct::modular {

LaurentXW LaurentXW::constant(const Rational& c) { return monomial(c, 0, 0); }

LaurentXW LaurentXW::monomial(const Rational& c, int x_power, int w_power) {
  LaurentXW p;
  p.add_term({x_power, w_power}, c);
  return p;
}

void LaurentXW::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentXW::coefficient(int x_power, int w_power) const {
  auto it = terms_.find({x_power, w_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentXW& LaurentXW::operator+=(const LaurentXW& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentXW& LaurentXW::operator-=(const LaurentXW& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentXW& LaurentXW::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentXW operator*(const LaurentXW& a, const LaurentXW& b) {
  LaurentXW out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

LaurentXW LaurentXW::pow(int n) const {
  if (n < 0) throw Error("negative power of a Laurent polynomial");
  LaurentXW out = constant(Rational(1));
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

LaurentXW LaurentXW::shifted(int x_power, int w_power) const {
  LaurentXW out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first + x_power, e.second + w_power}, c);
  return out;
}

LaurentXW LaurentXW::reflected() const {
  LaurentXW out;
  for (const auto& [e, c] : terms_) out.add_term({e.first, -e.second}, e.first % 2 == 0 ? c : Rational(-c));
  return out;
}

std::optional<LaurentXW> LaurentXW::divide_by_w_minus(int root) const {
  if (root != 1 && root != -1) throw Error("divide_by_w_minus supports roots ±1 only");
  std::map<int, std::map<int, Rational>> by_x;
  for (const auto& [e, c] : terms_) by_x[e.first][e.second] = c;
  LaurentXW out;
  for (const auto& [xp, poly] : by_x) {
    const int lo = poly.begin()->first;
    const int hi = poly.rbegin()->first;
    std::vector<Rational> a(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [wp, c] : poly) a[static_cast<std::size_t>(wp - lo)] = c;
    // synthetic division from the top: b_{k-1} = a_k + root·b_k
    Rational carry = 0;
    for (int k = hi; k > lo; --k) {
      carry = a[static_cast<std::size_t>(k - lo)] + root * carry;
      out.add_term({xp, k - 1}, carry);
    }
    if (a[0] + root * carry != 0) return std::nullopt;
  }
  return out;
}

LaurentXW::Exponent LaurentXW::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  int mx = terms_.begin()->first.first;
  int mw = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) {
    mx = std::min(mx, e.first);
    mw = std::min(mw, e.second);
  }
  return {mx, mw};
}

std::pair<int, std::vector<Rational>> LaurentXW::series(int order) const {
  const int shift = min_exponents().first;
  std::vector<Rational> out(static_cast<std::size_t>(order + 1));
  for (const auto& [e, c] : terms_) {
    const int offset = e.first - shift;
    Rational half_j(e.second, 2);
    half_j.canonicalize();
    Rational term = c;  // c·(j/2)^n / n!
    for (int n = 0; offset + n <= order; ++n) {
      if (n > 0) term = term * half_j / n;
      out[static_cast<std::size_t>(offset + n)] += term;
    }
  }
  return {shift, out};
}

long double LaurentXW::evaluate(long double x) const {
  long double sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += static_cast<long double>(c.get_d()) * std::pow(x, static_cast<long double>(e.first)) *
           std::exp(static_cast<long double>(e.second) * x / 2);
  }
  return sum;
}

std::string LaurentXW::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    std::string factors;
    if (e.first != 0) factors += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second != 0) {
      if (!factors.empty()) factors += "*";
      factors += e.second == 1 ? "w" : "w^" + std::to_string(e.second);
    }
    if (factors.empty()) {
      os << nct::to_string(mag);
    } else if (mag == 1) {
      os << factors;
    } else {
      os << nct::to_string(mag) << "*" << factors;
    }
  }
  return os.str();
}

ClosedForm::ClosedForm(LaurentXW num) : num_(std::move(num)), den_(LaurentXW::constant(Rational(1))) {}

ClosedForm::ClosedForm(LaurentXW num, LaurentXW den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("closed form with zero denominator");
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) { return *this += -o; }

ClosedForm& ClosedForm::operator*=(const ClosedForm& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  return *this;
}

ClosedForm& ClosedForm::operator/=(const ClosedForm& o) {
  if (o.num_.is_zero()) throw Error("division by the zero closed form");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  return *this;
}

bool operator==(const ClosedForm& a, const ClosedForm& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

ClosedForm ClosedForm::simplified() const {
  LaurentXW num = num_;
  LaurentXW den = den_;
  if (num.is_zero()) return ClosedForm();
  for (int root : {1, -1}) {
    for (;;) {
      auto qn = num.divide_by_w_minus(root);
      if (!qn) break;
      auto qd = den.divide_by_w_minus(root);
      if (!qd) break;
      num = std::move(*qn);
      den = std::move(*qd);
    }
  }
  const auto [mx, mw] = den.min_exponents();
  return ClosedForm(num.shifted(-mx, -mw), den.shifted(-mx, -mw));
}

ClosedForm ClosedForm::reflected() const { return ClosedForm(num_.reflected(), den_.reflected()); }

std::vector<Rational> ClosedForm::taylor(int order) const {
  if (order < 0) throw Error("negative Taylor order");
  std::vector<Rational> out(static_cast<std::size_t>(order + 1));
  if (num_.is_zero()) return out;
  auto first_nonzero = [](const std::vector<Rational>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 0) return static_cast<int>(i);
    }
    return -1;
  };
  for (int extra = 16; extra <= 256; extra *= 2) {
    const int length = order + extra;
    auto [sd, b] = den_.series(length);
    auto [sn, a] = num_.series(length);
    const int vb = first_nonzero(b);
    if (vb < 0) continue;
    const int va = first_nonzero(a);
    if (va < 0) {
      if (extra == 256) return out;  // numerator vanishes identically as a series
      continue;
    }
    const int valuation = sn + va - (sd + vb);
    if (valuation < 0) throw Error("closed form has a pole at x = 0: " + to_string());
    const int needed = order - valuation;
    if (needed < 0) return out;
    if (va + needed > length || vb + needed > length) continue;
    std::vector<Rational> q(static_cast<std::size_t>(needed + 1));
    for (int n = 0; n <= needed; ++n) {
      Rational acc = a[static_cast<std::size_t>(va + n)];
      for (int i = 1; i <= n; ++i) acc -= b[static_cast<std::size_t>(vb + i)] * q[static_cast<std::size_t>(n - i)];
      q[static_cast<std::size_t>(n)] = acc / b[static_cast<std::size_t>(vb)];
    }
    for (int n = 0; n <= needed; ++n) out[static_cast<std::size_t>(valuation + n)] = q[static_cast<std::size_t>(n)];
    return out;
  }
  throw Error("denominator series vanishes to high order: " + to_string());
}

long double ClosedForm::evaluate_direct(long double x) const { return num_.evaluate(x) / den_.evaluate(x); }

std::string ClosedForm::to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

ClosedForm modified_log_closed_form(int m) {
  if (m < 1 || m > 3) throw Error("modified logarithm order must be 1..3, got " + std::to_string(m));
  const LaurentXW t = LaurentXW::monomial(Rational(1), 0, 2) - LaurentXW::constant(Rational(1));
  LaurentXW num = LaurentXW::x();
  for (int j = 1; j <= m; ++j) num -= t.pow(j) * Rational(j % 2 == 1 ? 1 : -1, j);
  if (m % 2 == 1) num *= Rational(-1);
  return ClosedForm(num, t.pow(m + 1));
}

ClosedForm to_closed_form(const ModularFunctionExpr& f) {
  ClosedForm out;
  for (const auto& [basis, c] : f.terms()) {
    ClosedForm term(LaurentXW::monomial(c, 0, basis.half_power));
    if (basis.log_order != 0) term *= modified_log_closed_form(basis.log_order);
    out += term;
  }
  return out;
}

}  // namespace nct::modular
