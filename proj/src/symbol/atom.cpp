#include "nct/symbol/atom.hpp"

#include <charconv>

namespace nct::symbol {

Atom make_kpow(int n) {
  if (n == 0) throw Error("k^0 is not an atom");
  return KPow{n};
}

Atom make_deriv(int d1, int d2) {
  if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0)) throw Error("invalid derivative multi-index");
  return DerivK{d1, d2};
}

Atom make_resolvent(int p) {
  if (p < 1) throw Error("resolvent power must be positive");
  return Resolvent{p};
}

Atom make_mod_applied(modular::ModularFunctionExpr fn, Word arg) {
  return ModApplied{std::make_shared<const ModAppliedData>(ModAppliedData{std::move(fn), std::move(arg)})};
}

namespace {

std::strong_ordering compare_same(const KPow& a, const KPow& b) { return a.exponent <=> b.exponent; }

std::strong_ordering compare_same(const DerivK& a, const DerivK& b) {
  if (auto c = (a.d1 + a.d2) <=> (b.d1 + b.d2); c != 0) return c;
  if (auto c = a.d1 <=> b.d1; c != 0) return c;
  return a.d2 <=> b.d2;
}

std::strong_ordering compare_same(const Resolvent& a, const Resolvent& b) { return a.power <=> b.power; }

std::strong_ordering compare_same(const ModApplied& a, const ModApplied& b) {
  if (a.data == b.data) return std::strong_ordering::equal;
  if (auto c = a.data->fn <=> b.data->fn; c != 0) return c;
  return compare(a.data->arg, b.data->arg);
}

}  // namespace

std::strong_ordering compare(const Atom& a, const Atom& b) {
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return compare_same(x, std::get<T>(b));
      },
      a);
}

std::strong_ordering compare(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

Word canonical_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  int kpow = 0;
  int rpow = 0;
  bool in_run = false;
  auto flush = [&] {
    if (kpow != 0) out.push_back(KPow{kpow});
    if (rpow != 0) out.push_back(Resolvent{rpow});
    kpow = rpow = 0;
    in_run = false;
  };
  for (const Atom& a : w) {
    if (const auto* k = std::get_if<KPow>(&a)) {
      kpow += k->exponent;
      in_run = true;
    } else if (const auto* r = std::get_if<Resolvent>(&a)) {
      rpow += r->power;
      in_run = true;
    } else {
      if (in_run) flush();
      if (const auto* m = std::get_if<ModApplied>(&a)) {
        out.push_back(make_mod_applied(m->data->fn, canonical_word(m->data->arg)));
      } else {
        out.push_back(a);
      }
    }
  }
  if (in_run) flush();
  return out;
}

int resolvent_degree(const Word& w) {
  int p = 0;
  for (const Atom& a : w) {
    if (const auto* r = std::get_if<Resolvent>(&a)) p += r->power;
  }
  return p;
}

std::string to_string(const Atom& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KPow>) {
          return "k^" + std::to_string(x.exponent);
        } else if constexpr (std::is_same_v<T, DerivK>) {
          return "d(" + std::to_string(x.d1) + "," + std::to_string(x.d2) + ")k";
        } else if constexpr (std::is_same_v<T, Resolvent>) {
          return "b0^" + std::to_string(x.power);
        } else {
          return "F[" + x.data->fn.to_string() + "](" + to_string(x.data->arg) + ")";
        }
      },
      a);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += to_string(w[i]);
  }
  return s;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error("malformed atom '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Atom parse_atom(std::string_view text) {
  if (text.starts_with("k^")) return make_kpow(parse_int(text.substr(2), text));
  if (text.starts_with("b0^")) return make_resolvent(parse_int(text.substr(3), text));
  if (text.starts_with("d(") && text.ends_with(")k")) {
    std::string_view inner = text.substr(2, text.size() - 4);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw Error("malformed atom '" + std::string(text) + "'");
    return make_deriv(parse_int(inner.substr(0, comma), text), parse_int(inner.substr(comma + 1), text));
  }
  throw Error("unknown atom '" + std::string(text) + "'");
}

}  // namespace nct::symbol
