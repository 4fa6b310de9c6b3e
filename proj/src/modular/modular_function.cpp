#include "nct/modular/modular_function.hpp"

#include <sstream>

namespace nct::modular {

ModularFunctionExpr ModularFunctionExpr::constant(const Rational& c) {
  ModularFunctionExpr f;
  f.add_term({0, 0}, c);
  return f;
}

ModularFunctionExpr ModularFunctionExpr::delta_power(int half_power) {
  ModularFunctionExpr f;
  f.add_term({half_power, 0}, Rational(1));
  return f;
}

ModularFunctionExpr ModularFunctionExpr::modified_log(int m) {
  if (m < 1 || m > 3) throw Error("modified logarithm order must be 1..3, got " + std::to_string(m));
  ModularFunctionExpr f;
  f.add_term({0, m}, Rational(1));
  return f;
}

void ModularFunctionExpr::add_term(ModularBasis basis, const Rational& c) {
  if (basis.log_order < 0 || basis.log_order > 3)
    throw Error("modified logarithm order out of range: " + std::to_string(basis.log_order));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(basis, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ModularFunctionExpr& ModularFunctionExpr::operator+=(const ModularFunctionExpr& other) {
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

ModularFunctionExpr& ModularFunctionExpr::operator-=(const ModularFunctionExpr& other) {
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

ModularFunctionExpr& ModularFunctionExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

ModularFunctionExpr operator*(const ModularFunctionExpr& a, const ModularFunctionExpr& b) {
  ModularFunctionExpr out;
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      if (ba.log_order != 0 && bb.log_order != 0)
        throw Error("product of two modified logarithms is outside the modular basis");
      out.add_term({ba.half_power + bb.half_power, ba.log_order + bb.log_order}, ca * cb);
    }
  }
  return out;
}

ModularFunctionExpr ModularFunctionExpr::times_delta_power(int half_power) const {
  ModularFunctionExpr out;
  for (const auto& [b, c] : terms_) out.add_term({b.half_power + half_power, b.log_order}, c);
  return out;
}

Rational ModularFunctionExpr::coefficient(ModularBasis basis) const {
  auto it = terms_.find(basis);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string ModularFunctionExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string factors;
    if (b.half_power == 2) {
      factors = "D";
    } else if (b.half_power % 2 == 0 && b.half_power != 0) {
      factors = "D^(" + std::to_string(b.half_power / 2) + ")";
    } else if (b.half_power != 0) {
      factors = "D^(" + std::to_string(b.half_power) + "/2)";
    }
    if (b.log_order != 0) {
      if (!factors.empty()) factors += "*";
      factors += "L" + std::to_string(b.log_order);
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

std::strong_ordering operator<=>(const ModularFunctionExpr& a, const ModularFunctionExpr& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    int cmp = ::cmp(ia->second, ib->second);
    if (cmp != 0) return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
  return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace nct::modular
