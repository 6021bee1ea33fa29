#include "dfinite/number.hpp"

#include <stdexcept>

namespace dfinite {

Rat parse_rat(std::string_view s) {
  std::string str(s);
  while (!str.empty() && (str.front() == ' ')) str.erase(str.begin());
  while (!str.empty() && (str.back() == ' ')) str.pop_back();
  if (str.empty()) throw std::invalid_argument("empty rational");
  auto slash = str.find('/');
  auto check = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed rational: " + t);
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed rational: " + t);
  };
  Rat r;
  if (slash == std::string::npos) {
    check(str);
    Int n(str[0] == '+' ? str.substr(1) : str, 10);
    r = Rat(n);
  } else {
    std::string a = str.substr(0, slash), b = str.substr(slash + 1);
    check(a);
    check(b);
    Int n(a[0] == '+' ? a.substr(1) : a, 10), d(b[0] == '+' ? b.substr(1) : b, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + str);
    r = Rat(n, d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& z) { return z.get_str(10); }

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat falling(const Rat& x, unsigned k) {
  Rat r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x - i;
  return r;
}

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace dfinite
