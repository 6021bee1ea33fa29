#include "dfinite/hypergeometric.hpp"

#include <algorithm>
#include <utility>

#include "dfinite/errors.hpp"

namespace dfinite {

Rat frac_conv(const Rat& x) {
  Rat f = x - Rat(floor(x));
  return f == 0 ? Rat(1) : f;
}

bool interlaces(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  if (u.size() != v.size()) return false;
  std::vector<std::pair<Rat, int>> all;
  for (const auto& x : u) all.emplace_back(frac_conv(x), 0);
  for (const auto& x : v) all.emplace_back(frac_conv(x), 1);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].first == all[i - 1].first || all[i].second == all[i - 1].second) return false;
  return true;
}

InterlacingResult interlacing_criterion(const HypParams& p) {
  InterlacingResult res;
  if (p.a.empty() || p.b.size() + 1 != p.a.size()) {
    res.reason = "need k top parameters and k-1 bottom parameters";
    return res;
  }
  std::vector<Rat> b = p.b;
  b.emplace_back(1);
  for (const auto& x : p.b)
    if (is_integer(x) && x <= 0) {
      res.reason = "bottom parameter " + x.get_str() + " is a nonpositive integer";
      return res;
    }
  for (const auto& x : p.a)
    for (const auto& y : b)
      if (is_integer(x - y)) {
        res.reason = "parameters " + x.get_str() + " and " + y.get_str() + " agree modulo Z";
        return res;
      }
  Int d = 1;
  for (const auto& x : p.a) d = lcm(d, Int(x.get_den()));
  for (const auto& x : b) d = lcm(d, Int(x.get_den()));
  res.denominator = d;
  for (Int l = 1; l < d; ++l) {
    if (gcd(l, d) != 1) continue;
    std::vector<Rat> la, lb;
    for (const auto& x : p.a) la.push_back(x * Rat(l));
    for (const auto& x : b) lb.push_back(x * Rat(l));
    if (!interlaces(la, lb)) {
      res.kind = InterlacingResult::Kind::Transcendental;
      res.witness = l;
      return res;
    }
  }
  res.kind = InterlacingResult::Kind::Algebraic;
  return res;
}

TruncSeries hypergeometric_series(const HypParams& p, long n) {
  if (p.a.empty() || p.b.size() + 1 != p.a.size()) throw InputError("need k top parameters and k-1 bottom parameters");
  for (const auto& x : p.b)
    if (is_integer(x) && x <= 0) throw InputError("bottom parameter is a nonpositive integer");
  std::vector<Rat> out;
  Rat t = 1;
  for (long m = 0; m < n; ++m) {
    out.push_back(t);
    Rat num = 1, den = Rat(m + 1);
    for (const auto& x : p.a) num *= x + Rat(m);
    for (const auto& x : p.b) den *= x + Rat(m);
    t = t * num / den;
  }
  return TruncSeries(std::move(out));
}

std::string to_string(InterlacingResult::Kind k) {
  switch (k) {
    case InterlacingResult::Kind::Algebraic:
      return "algebraic-by-interlacing";
    case InterlacingResult::Kind::Transcendental:
      return "transcendental-by-interlacing";
    case InterlacingResult::Kind::Inapplicable:
      break;
  }
  return "inapplicable";
}

}  // namespace dfinite
