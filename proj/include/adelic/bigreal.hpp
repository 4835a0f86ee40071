#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adelic {

namespace mp = boost::multiprecision;

using Int = mp::mpz_int;
using Rational = mp::mpq_rational;

// Arbitrary-precision binary float. Precision is the process-wide default,
// set through set_precision_bits (decimal digits under the hood).
using BigReal = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline unsigned& precision_bits_ref() {
  static unsigned bits = 256;
  return bits;
}

inline void set_precision_bits(unsigned bits) {
  if (bits < 53) throw std::invalid_argument("precision must be >= 53 bits");
  precision_bits_ref() = bits;
  // 2 guard digits on top of the bit->digit conversion
  const unsigned digits = static_cast<unsigned>(bits * 0.30103) + 2;
  BigReal::default_precision(digits);
}

inline unsigned precision_bits() { return precision_bits_ref(); }

inline BigReal to_real(const Int& n) { return BigReal(n); }
inline BigReal to_real(const Rational& q) { return BigReal(q); }

inline BigReal pi_value() {
  BigReal one = 1;
  return 4 * atan(one);
}

// log(max(x,1))
inline BigReal log_plus(const BigReal& x) {
  if (x <= 1) return BigReal(0);
  return log(x);
}

struct Complex {
  BigReal re, im;

  Complex() : re(0), im(0) {}
  Complex(BigReal r) : re(std::move(r)), im(0) {}
  Complex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i = 0.0) : re(r), im(i) {}

  Complex operator-() const { return {-re, -im}; }
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const {
    BigReal n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  bool operator==(const Complex& o) const { return re == o.re && im == o.im; }

  BigReal norm() const { return re * re + im * im; }
  BigReal abs() const { return sqrt(norm()); }
};

inline Complex operator*(const BigReal& s, const Complex& z) {
  return {s * z.re, s * z.im};
}

inline BigReal abs(const Complex& z) { return z.abs(); }

inline Complex csqrt(const Complex& z) {
  BigReal r = z.abs();
  if (r == 0) return Complex();
  BigReal two = 2;
  BigReal u = sqrt((r + z.re) / two);
  BigReal v = sqrt((r - z.re) / two);
  if (z.im < 0) v = -v;
  return {u, v};
}

// Deterministic RNG: splitmix64 core, identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1) with 53 bits
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // uniform integer in [lo, hi] inclusive
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace adelic
