#pragma once

#include "adelic/bigreal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace adelic {

// A place of Q: the archimedean absolute value or a p-adic one.
// Local degree N_v is always 1 over Q.
struct Place {
  bool archimedean = true;
  Int prime = 0;

  static Place arch() { return Place{true, 0}; }
  static Place finite(Int p) { return Place{false, std::move(p)}; }

  bool operator==(const Place& o) const {
    return archimedean == o.archimedean && prime == o.prime;
  }
  bool operator<(const Place& o) const {
    if (archimedean != o.archimedean) return archimedean;  // arch sorts first
    return prime < o.prime;
  }
};

inline std::string place_name(const Place& v) {
  return v.archimedean ? "arch" : v.prime.str();
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.backend().data(), 32) != 0;
}

namespace detail {

inline Int pollard_rho(const Int& n, unsigned long c) {
  // Brent's cycle variant
  Int x = 2, y = 2, d = 1, q = 1, ys = 0;
  unsigned long r = 1;
  const unsigned long m = 128;
  auto step = [&](const Int& v) { return (v * v + c) % n; };
  while (d == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && d == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = step(y);
        q = q * abs(x - y) % n;
      }
      d = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (d == n) {
    d = 1;
    while (d == 1) {
      ys = step(ys);
      d = gcd(abs(x - ys), n);
    }
  }
  return d;
}

inline void factor_into(Int n, std::map<Int, long>& out) {
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  // trial division by 6k+-1 up to 10^4
  for (long p = 41; p <= 10000 && n > 1; p += 2) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = n;
  for (unsigned long c = 1; d == n || d == 1; ++c) d = pollard_rho(n, c);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

// prime factorization of |n|, n != 0
inline std::map<Int, long> factorize(Int n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::map<Int, long> out;
  detail::factor_into(abs(n), out);
  return out;
}

// v_p(x) for nonzero rational x
inline long valuation(const Rational& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  long v = 0;
  Int n = numerator(x);
  while (n % p == 0) {
    ++v;
    n /= p;
  }
  if (v > 0) return v;
  Int d = denominator(x);
  while (d % p == 0) {
    --v;
    d /= p;
  }
  return v;
}

// log|x|_v with the standard normalization: prod_v |x|_v = 1
inline BigReal log_abs(const Rational& x, const Place& v) {
  if (x == 0) throw std::invalid_argument("log_abs of zero");
  if (v.archimedean) return log(abs(to_real(x)));
  return -BigReal(valuation(x, v.prime)) * log(to_real(v.prime));
}

// primes dividing numerator or denominator
inline std::vector<Int> support_primes(const Rational& x) {
  if (x == 0) throw std::invalid_argument("support of zero");
  std::map<Int, long> f;
  Int n = abs(numerator(x)), d = denominator(x);
  if (n > 1) detail::factor_into(n, f);
  if (d > 1) detail::factor_into(d, f);
  std::vector<Int> out;
  out.reserve(f.size());
  for (auto& [p, e] : f) out.push_back(p);
  return out;
}

// sum of log|x|_v over the archimedean place and all primes in the support;
// mathematically zero, returns the floating residual
inline BigReal product_formula_residual(const Rational& x) {
  BigReal s = log_abs(x, Place::arch());
  for (const Int& p : support_primes(x)) s += log_abs(x, Place::finite(p));
  return s;
}

}  // namespace adelic
