#include "dfinite/generators.hpp"

#include <cctype>
#include <sstream>

#include "dfinite/errors.hpp"

namespace dfinite {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p;
  p.nvars = nvars;
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p;
  p.nvars = nvars;
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms[e] = 1;
  return p;
}

Rat MPoly::constant_term() const {
  auto it = terms.find(std::vector<int>(nvars, 0));
  return it == terms.end() ? Rat(0) : it->second;
}

int MPoly::degree_in(int i) const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[i]);
  return d;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool mono = false;
    std::ostringstream m;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (mono) m << "*";
      m << vars[i];
      if (e[i] > 1) m << "^" << e[i];
      mono = true;
    }
    if (!mono)
      os << a.get_str();
    else if (a == 1)
      os << m.str();
    else
      os << a.get_str() << "*" << m.str();
  }
  return os.str();
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [e, c] : b.terms) {
    Rat& x = r.terms[e];
    x += c;
    if (x == 0) r.terms.erase(e);
  }
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rat& x = r.terms[e];
      x += ca * cb;
      if (x == 0) r.terms.erase(e);
    }
  return r;
}

MPoly pow(const MPoly& a, unsigned e) {
  MPoly r = MPoly::constant(a.nvars, 1);
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int n() const { return static_cast<int>(vars_.size()); }

  MPoly expr() {
    MPoly p = term();
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }
  MPoly term() {
    MPoly p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        MPoly d = unary();
        if (d.terms.size() != 1 || d.terms.begin()->first != std::vector<int>(n(), 0))
          fail("division by a non-constant");
        p = p * MPoly::constant(n(), 1 / d.terms.begin()->second);
      } else {
        return p;
      }
    }
  }
  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  MPoly power() {
    MPoly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return pow(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
  }
  MPoly atom() {
    skip();
    if (eat('(')) {
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly::constant(n(), Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < n(); ++i)
        if (vars_[i] == name) return MPoly::variable(n(), i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }
};

// Expansion of num/den over the box [0, N)^k, keeping only the slices of the
// last variable that later slices still read.
template <class T>
std::vector<Rat> diagonal_box(const std::vector<std::pair<std::vector<int>, T>>& num,
                              const std::vector<std::pair<std::vector<int>, T>>& den_rest, const T& den0,
                              int k, long N, int window) {
  long slice = 1;
  for (int i = 0; i + 1 < k; ++i) slice *= N;
  std::vector<long> stride(k, 0);
  if (k >= 2) stride[k - 2] = 1;
  for (int i = k - 3; i >= 0; --i) stride[i] = stride[i + 1] * N;

  std::vector<std::vector<T>> ring(window + 1, std::vector<T>(slice));
  std::vector<long> offset;
  for (const auto& [e, c] : den_rest) {
    long o = 0;
    for (int i = 0; i + 1 < k; ++i) o += e[i] * stride[i];
    offset.push_back(o);
  }
  std::vector<Rat> out;
  std::vector<int> idx(std::max(k - 1, 1), 0);
  for (long last = 0; last < N; ++last) {
    auto& cur = ring[last % (window + 1)];
    for (auto& x : cur) x = 0;
    for (const auto& [e, c] : num) {
      if (e[k - 1] != last) continue;
      bool in = true;
      long o = 0;
      for (int i = 0; i + 1 < k; ++i) {
        in = in && e[i] < N;
        o += e[i] * stride[i];
      }
      if (in) cur[o] += c;
    }
    std::fill(idx.begin(), idx.end(), 0);
    for (long pos = 0; pos < slice; ++pos) {
      T acc = cur[pos];
      for (std::size_t t = 0; t < den_rest.size(); ++t) {
        const auto& e = den_rest[t].first;
        if (e[k - 1] > last) continue;
        bool ok = true;
        for (int i = 0; i + 1 < k && ok; ++i) ok = idx[i] >= e[i];
        if (!ok) continue;
        const auto& src = ring[(last - e[k - 1]) % (window + 1)];
        acc -= den_rest[t].second * src[pos - offset[t]];
      }
      if constexpr (std::is_same_v<T, Rat>) {
        cur[pos] = acc / den0;
      } else {
        cur[pos] = den0 == 1 ? acc : T(-acc);
      }
      for (int i = k - 2; i >= 0; --i) {
        if (++idx[i] < N) break;
        idx[i] = 0;
      }
    }
    long diag = 0;
    for (int i = 0; i + 1 < k; ++i) diag += last * stride[i];
    out.push_back(Rat(cur[diag]));
  }
  return out;
}

}  // namespace

MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& vars) {
  Parser p(text, vars);
  MPoly r = p.parse();
  r.nvars = static_cast<int>(vars.size());
  return r;
}

DiagonalSpec parse_diagonal(const std::string& num, const std::string& den, const std::vector<std::string>& vars) {
  if (vars.empty()) throw InputError("a diagonal needs at least one variable");
  return {parse_mpoly(num, vars), parse_mpoly(den, vars), vars};
}

DiagonalSpec apery_like_diagonal(int p, int q) {
  if (p < 1 || q < 0) throw InputError("need p >= 1 and q >= 0");
  const int k = p + q;
  std::vector<std::string> vars;
  for (int i = 1; i <= p; ++i) vars.push_back("x" + std::to_string(i));
  for (int j = 1; j <= q; ++j) vars.push_back("y" + std::to_string(j));
  MPoly one = MPoly::constant(k, 1);
  MPoly ys = one, all = one;
  for (int j = 0; j < q; ++j) {
    ys = ys * (one - MPoly::variable(k, p + j));
    all = all * MPoly::variable(k, p + j);
  }
  MPoly den = ys - MPoly::variable(k, 0);
  for (int i = 1; i < p; ++i) den = den * (one - MPoly::variable(k, i));
  for (int i = 0; i < p; ++i) all = all * MPoly::variable(k, i);
  return {one, den - all, vars};
}

StepSet trident_steps() { return {{1, 1}, {0, 1}, {-1, 1}, {0, -1}}; }

StepSet parse_steps(const std::string& text) {
  if (text == "trident") return trident_steps();
  StepSet out;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = text.find('(', pos);
    if (open == std::string::npos) break;
    std::size_t close = text.find(')', open);
    if (close == std::string::npos) throw InputError("unbalanced step list");
    std::string body = text.substr(open + 1, close - open - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw InputError("step needs two coordinates");
    try {
      out.push_back({std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))});
    } catch (const std::exception&) {
      throw InputError("bad step '" + body + "'");
    }
    pos = close + 1;
  }
  if (out.empty()) throw InputError("empty step set");
  return out;
}

TruncSeries gen_binomial_sum(const std::vector<int>& p, long n) {
  if (p.empty() || p[0] < 1) throw InputError("the first exponent must be at least 1");
  std::vector<Rat> out;
  for (long m = 0; m < n; ++m) {
    Int s = 0;
    for (long k = 0; k <= m; ++k) {
      Int term = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        Int c = binomial(static_cast<unsigned long>(m + static_cast<long>(i) * k), static_cast<unsigned long>(k));
        Int cp;
        mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p[i]));
        term *= cp;
      }
      s += term;
    }
    out.emplace_back(s);
  }
  return TruncSeries(std::move(out));
}

TruncSeries gen_walk(const StepSet& steps, long n) {
  if (steps.empty()) throw InputError("empty step set");
  int up = 0;
  for (const auto& s : steps) up = std::max({up, s[0], s[1]});
  const long side = std::max<long>(1, up * std::max<long>(n - 1, 0) + 1);
  std::vector<Int> cur(side * side), next(side * side);
  cur[0] = 1;
  std::vector<Rat> out;
  for (long len = 0; len < n; ++len) {
    Int total = 0;
    for (const auto& c : cur) total += c;
    out.emplace_back(total);
    if (len + 1 == n) break;
    for (auto& x : next) x = 0;
    const long reach = std::min<long>(side, up * len + 1);
    for (long x = 0; x < reach; ++x)
      for (long y = 0; y < reach; ++y) {
        const Int& c = cur[x * side + y];
        if (c == 0) continue;
        for (const auto& s : steps) {
          long nx = x + s[0], ny = y + s[1];
          if (nx < 0 || ny < 0) continue;
          next[nx * side + ny] += c;
        }
      }
    std::swap(cur, next);
  }
  return TruncSeries(std::move(out));
}

TruncSeries gen_diagonal(const DiagonalSpec& spec, long n) {
  const int k = static_cast<int>(spec.vars.size());
  if (k == 0) throw InputError("a diagonal needs at least one variable");
  const Rat d0 = spec.den.constant_term();
  if (d0 == 0) throw InputError("denominator vanishes at the origin");
  if (n <= 0) return TruncSeries();
  // Work with integer coefficients when the normalized denominator allows it.
  Int scale = 1;
  for (const auto& [e, c] : spec.den.terms) scale = lcm(scale, Int(c.get_den()));
  Int num_scale = 1;
  for (const auto& [e, c] : spec.num.terms) num_scale = lcm(num_scale, Int(c.get_den()));
  const int window = spec.den.degree_in(k - 1);
  Rat d0s = d0 * Rat(scale);
  bool integral = d0s == 1 || d0s == -1;
  std::vector<Rat> out;
  if (integral) {
    std::vector<std::pair<std::vector<int>, Int>> num, rest;
    for (const auto& [e, c] : spec.num.terms) num.emplace_back(e, Int(c * Rat(num_scale)));
    for (const auto& [e, c] : spec.den.terms)
      if (e != std::vector<int>(k, 0)) rest.emplace_back(e, Int(c * Rat(scale)));
    out = diagonal_box<Int>(num, rest, Int(d0s), k, n, window);
    // num/den = (num_scale^-1 N) / (scale^-1 D).
    for (auto& x : out) x = x * Rat(scale) / Rat(num_scale);
  } else {
    std::vector<std::pair<std::vector<int>, Rat>> num, rest;
    for (const auto& [e, c] : spec.num.terms) num.emplace_back(e, c);
    for (const auto& [e, c] : spec.den.terms)
      if (e != std::vector<int>(k, 0)) rest.emplace_back(e, c);
    out = diagonal_box<Rat>(num, rest, d0, k, n, window);
  }
  return TruncSeries(std::move(out));
}

}  // namespace dfinite
