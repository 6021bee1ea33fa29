#ifndef DFINITE_NUMBER_HPP
#define DFINITE_NUMBER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dfinite {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rat parse_rat(std::string_view s);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }
Int floor(const Rat& r);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int binomial(unsigned long n, unsigned long k);

// Falling factorial x (x-1) ... (x-k+1).
Rat falling(const Rat& x, unsigned k);

bool is_probable_prime(const Int& n);

}  // namespace dfinite

#endif
