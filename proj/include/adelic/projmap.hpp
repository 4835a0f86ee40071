#pragma once

#include "adelic/qfield.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

// ---------------------------------------------------------------------------
// polynomial helpers
//
// A binary form of degree d is stored as d+1 coefficients in X-degree
// descending order: c[i] multiplies X^{d-i} Y^i. Dehomogenized at Y=1 this is
// the usual descending coefficient list of a univariate polynomial.
// ---------------------------------------------------------------------------

// exact evaluation for Int coefficients at an Int pair
inline Int eval_form_int(const std::vector<Int>& c, const Int& x, const Int& y) {
  Int acc = 0, ypow = 1;
  // sum c[d-k] x^k y^{d-k} by ascending x-power
  std::size_t d = c.size() - 1;
  Int xpow = 1;
  std::vector<Int> xs(d + 1), ys(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    xs[k] = xpow;
    xpow *= x;
  }
  for (std::size_t k = 0; k <= d; ++k) {
    ys[k] = ypow;
    ypow *= y;
  }
  for (std::size_t i = 0; i <= d; ++i) acc += c[i] * xs[d - i] * ys[i];
  return acc;
}

inline Complex eval_form_cplx(const std::vector<Complex>& c, const Complex& x,
                              const Complex& y) {
  std::size_t d = c.size() - 1;
  Complex acc, xpow(BigReal(1)), ypow(BigReal(1));
  std::vector<Complex> xs(d + 1), ys(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    xs[k] = xpow;
    xpow = xpow * x;
    ys[k] = ypow;
    ypow = ypow * y;
  }
  for (std::size_t i = 0; i <= d; ++i) acc += c[i] * xs[d - i] * ys[i];
  return acc;
}

// product of two descending coefficient lists (degrees add)
inline std::vector<Int> poly_mul(const std::vector<Int>& a,
                                 const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// ---------------------------------------------------------------------------
// exact determinants: Bareiss fraction-free elimination with row pivoting
// ---------------------------------------------------------------------------

inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Sylvester matrix of two degree-d binary forms (descending coefficients)
inline std::vector<std::vector<Int>> sylvester_matrix(
    const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t d = a.size() - 1;
  const std::size_t n = 2 * d;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j <= d; ++j) m[r][r + j] = a[j];
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j <= d; ++j) m[d + r][r + j] = b[j];
  return m;
}

// ---------------------------------------------------------------------------
// homogeneous lifts and rational maps
// ---------------------------------------------------------------------------

struct HomogeneousLift {
  int degree = 0;
  std::vector<Rational> c0, c1;  // coefficients of F0, F1, X-degree descending

  bool is_zero() const {
    for (auto& c : c0)
      if (c != 0) return false;
    for (auto& c : c1)
      if (c != 0) return false;
    return true;
  }

  // valid only after normalize_lift
  std::vector<Int> int_c0() const {
    std::vector<Int> v;
    v.reserve(c0.size());
    for (auto& c : c0) v.push_back(numerator(c));
    return v;
  }
  std::vector<Int> int_c1() const {
    std::vector<Int> v;
    v.reserve(c1.size());
    for (auto& c : c1) v.push_back(numerator(c));
    return v;
  }
};

// Integer lift with coefficient gcd 1 and the first nonzero coefficient of F0
// (else F1) positive. Unique representative of the projective class.
inline HomogeneousLift normalize_lift(const HomogeneousLift& f) {
  if (f.is_zero()) throw std::invalid_argument("zero lift");
  Int l = 1;
  for (auto& c : f.c0) l = lcm(l, denominator(c));
  for (auto& c : f.c1) l = lcm(l, denominator(c));
  std::vector<Int> a, b;
  for (auto& c : f.c0) a.push_back(numerator(Rational(c * l)));
  for (auto& c : f.c1) b.push_back(numerator(Rational(c * l)));
  Int g = 0;
  for (auto& c : a) g = gcd(g, c);
  for (auto& c : b) g = gcd(g, c);
  Int lead = 0;
  for (auto& c : a)
    if (c != 0) {
      lead = c;
      break;
    }
  if (lead == 0)
    for (auto& c : b)
      if (c != 0) {
        lead = c;
        break;
      }
  if (lead < 0) g = -g;
  HomogeneousLift out;
  out.degree = f.degree;
  for (auto& c : a) out.c0.emplace_back(c / g);
  for (auto& c : b) out.c1.emplace_back(c / g);
  return out;
}

// exact homogeneous resultant (degree 2d in the coefficients)
inline Rational resultant(const HomogeneousLift& f) {
  Int l = 1;
  for (auto& c : f.c0) l = lcm(l, denominator(c));
  for (auto& c : f.c1) l = lcm(l, denominator(c));
  std::vector<Int> a, b;
  for (auto& c : f.c0) a.push_back(numerator(Rational(c * l)));
  for (auto& c : f.c1) b.push_back(numerator(Rational(c * l)));
  Int det = bareiss_det(sylvester_matrix(a, b));
  Rational scale = Rational(l);
  Rational denom = 1;
  for (int i = 0; i < 2 * f.degree; ++i) denom *= scale;
  return Rational(det) / denom;
}

// log ||F||_v (sup norm of the coefficients)
inline BigReal sup_norm_log(const HomogeneousLift& f, const Place& v) {
  if (v.archimedean) {
    Rational m = 0;
    for (auto& c : f.c0) m = std::max(m, Rational(abs(c)));
    for (auto& c : f.c1) m = std::max(m, Rational(abs(c)));
    return log(to_real(m));
  }
  long vmin = 0;
  bool first = true;
  for (auto& c : f.c0)
    if (c != 0) {
      long w = valuation(c, v.prime);
      vmin = first ? w : std::min(vmin, w);
      first = false;
    }
  for (auto& c : f.c1)
    if (c != 0) {
      long w = valuation(c, v.prime);
      vmin = first ? w : std::min(vmin, w);
      first = false;
    }
  return -BigReal(vmin) * log(to_real(v.prime));
}

struct RationalMapP1 {
  HomogeneousLift lift;   // normalized
  Rational res;           // cached resultant of the normalized lift
  std::vector<Int> bad_primes;

  int degree() const { return lift.degree; }

  static RationalMapP1 from_lift(const HomogeneousLift& raw) {
    RationalMapP1 f;
    f.lift = normalize_lift(raw);
    f.res = resultant(f.lift);
    if (f.res == 0) throw std::invalid_argument("degenerate map: Res(F) = 0");
    Int r = abs(numerator(f.res));
    if (r > 1)
      for (auto& [p, e] : factorize(r)) f.bad_primes.push_back(p);
    return f;
  }
};

// convenience: polynomial map z -> sum coeffs[k] z^k (ascending)
inline RationalMapP1 polynomial_map(const std::vector<Rational>& ascending) {
  int d = static_cast<int>(ascending.size()) - 1;
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  HomogeneousLift L;
  L.degree = d;
  L.c0.assign(d + 1, Rational(0));
  L.c1.assign(d + 1, Rational(0));
  for (int k = 0; k <= d; ++k) L.c0[d - k] = ascending[k];
  L.c1[d] = 1;
  return RationalMapP1::from_lift(L);
}

// ---------------------------------------------------------------------------
// points
// ---------------------------------------------------------------------------

// Point of P^1(Q), stored as a coprime integer pair (a : b), b >= 0 and a > 0
// when b = 0. The finite-place sup norm of this lift is 1 at every prime.
struct ProjPointQ {
  Int a = 0, b = 1;

  ProjPointQ() = default;
  ProjPointQ(Int x, Int y) : a(std::move(x)), b(std::move(y)) { normalize(); }

  static ProjPointQ infinity() { return ProjPointQ(1, 0); }
  static ProjPointQ from_rational(const Rational& q) {
    return ProjPointQ(numerator(q), denominator(q));
  }

  void normalize() {
    if (a == 0 && b == 0) throw std::invalid_argument("zero point");
    Int g = gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
      a = -a;
      b = -b;
    }
  }

  bool is_infinity() const { return b == 0; }
  Rational affine() const {
    if (b == 0) throw std::domain_error("point at infinity");
    return Rational(a) / Rational(b);
  }

  bool operator==(const ProjPointQ& o) const { return a == o.a && b == o.b; }
  bool operator<(const ProjPointQ& o) const {
    return a < o.a || (a == o.a && b < o.b);
  }
};

// Point of P^1(C) at working precision; lazily renormalized so that
// max(|X0|,|X1|) stays in [1/2, 2].
struct ProjPointC {
  Complex x0, x1;

  ProjPointC() : x0(BigReal(0)), x1(BigReal(1)) {}
  ProjPointC(Complex a, Complex b) : x0(std::move(a)), x1(std::move(b)) {
    renormalize();
  }
  static ProjPointC from_affine(const Complex& z) {
    return ProjPointC(z, Complex(BigReal(1)));
  }
  static ProjPointC from_q(const ProjPointQ& p) {
    return ProjPointC(Complex(to_real(p.a)), Complex(to_real(p.b)));
  }

  BigReal sup_norm() const {
    BigReal n0 = x0.abs(), n1 = x1.abs();
    return n0 > n1 ? n0 : n1;
  }

  void renormalize() {
    BigReal n = sup_norm();
    if (n == 0) throw std::invalid_argument("zero lift");
    BigReal half = BigReal(1) / 2;
    if (n >= half && n <= 2) return;
    BigReal s = 1 / n;
    x0 = s * x0;
    x1 = s * x1;
  }
};

// ---------------------------------------------------------------------------
// chordal distance: |X0 Y1 - X1 Y0|_v / (||X||_v ||Y||_v), max norms
// ---------------------------------------------------------------------------

inline BigReal chordal_distance(const ProjPointQ& x, const ProjPointQ& y,
                                const Place& v) {
  Int cross = x.a * y.b - x.b * y.a;
  if (cross == 0) return BigReal(0);
  if (v.archimedean) {
    Int nx = std::max(Int(abs(x.a)), Int(abs(x.b)));
    Int ny = std::max(Int(abs(y.a)), Int(abs(y.b)));
    return to_real(Int(abs(cross))) / (to_real(nx) * to_real(ny));
  }
  // normalized lifts have norm 1 at every finite place
  long w = valuation(Rational(cross), v.prime);
  return exp(-BigReal(w) * log(to_real(v.prime)));
}

inline BigReal chordal_distance(const ProjPointC& x, const ProjPointC& y) {
  Complex cross = x.x0 * y.x1 - x.x1 * y.x0;
  return cross.abs() / (x.sup_norm() * y.sup_norm());
}

// ---------------------------------------------------------------------------
// evaluation and iteration
// ---------------------------------------------------------------------------

inline ProjPointQ apply(const RationalMapP1& f, const ProjPointQ& x) {
  Int u = eval_form_int(f.lift.int_c0(), x.a, x.b);
  Int v = eval_form_int(f.lift.int_c1(), x.a, x.b);
  return ProjPointQ(std::move(u), std::move(v));
}

// normalized lift of f^n (degree d^n); guard d^n <= 4096
inline HomogeneousLift iterate_lift(const HomogeneousLift& f, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double deg = 1;
  for (int i = 0; i < n; ++i) {
    deg *= f.degree;
    if (deg > 4096) throw std::invalid_argument("iterate depth guard: d^n > 4096");
  }
  HomogeneousLift base = normalize_lift(f);
  std::vector<Int> g0 = base.int_c0(), g1 = base.int_c1();
  std::vector<Int> a = g0, b = g1;  // current iterate
  for (int it = 1; it < n; ++it) {
    // compose base with (a, b): sum_i c[i] a^{d-i} b^i
    std::size_t d = g0.size() - 1;
    std::vector<std::vector<Int>> apow(d + 1), bpow(d + 1);
    apow[0] = {Int(1)};
    bpow[0] = {Int(1)};
    for (std::size_t k = 1; k <= d; ++k) {
      apow[k] = poly_mul(apow[k - 1], a);
      bpow[k] = poly_mul(bpow[k - 1], b);
    }
    std::size_t outdeg = d * (a.size() - 1);
    std::vector<Int> n0(outdeg + 1, Int(0)), n1(outdeg + 1, Int(0));
    for (std::size_t i = 0; i <= d; ++i) {
      if (g0[i] != 0 || g1[i] != 0) {
        std::vector<Int> term = poly_mul(apow[d - i], bpow[i]);
        for (std::size_t j = 0; j < term.size(); ++j) {
          if (g0[i] != 0) n0[j] += g0[i] * term[j];
          if (g1[i] != 0) n1[j] += g1[i] * term[j];
        }
      }
    }
    a = std::move(n0);
    b = std::move(n1);
    // strip content each round
    Int g = 0;
    for (auto& c : a) g = gcd(g, c);
    for (auto& c : b) g = gcd(g, c);
    if (g > 1) {
      for (auto& c : a) c /= g;
      for (auto& c : b) c /= g;
    }
  }
  HomogeneousLift out;
  out.degree = static_cast<int>(a.size()) - 1;
  for (auto& c : a) out.c0.emplace_back(c);
  for (auto& c : b) out.c1.emplace_back(c);
  return normalize_lift(out);
}

// phi^{-1} . f . phi for phi(z) = (a z + b)/(c z + e); substitution is exact
inline RationalMapP1 mobius_conjugate(const RationalMapP1& f, const Int& a,
                                      const Int& b, const Int& c, const Int& e) {
  if (a * e - b * c == 0) throw std::invalid_argument("singular mobius matrix");
  HomogeneousLift base = normalize_lift(f.lift);
  std::vector<Int> g0 = base.int_c0(), g1 = base.int_c1();
  std::size_t d = g0.size() - 1;
  std::vector<Int> u = {a, b}, v = {c, e};
  std::vector<std::vector<Int>> upow(d + 1), vpow(d + 1);
  upow[0] = {Int(1)};
  vpow[0] = {Int(1)};
  for (std::size_t k = 1; k <= d; ++k) {
    upow[k] = poly_mul(upow[k - 1], u);
    vpow[k] = poly_mul(vpow[k - 1], v);
  }
  std::vector<Int> A(d + 1, Int(0)), B(d + 1, Int(0));
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<Int> term = poly_mul(upow[d - i], vpow[i]);
    for (std::size_t j = 0; j < term.size(); ++j) {
      if (g0[i] != 0) A[j] += g0[i] * term[j];
      if (g1[i] != 0) B[j] += g1[i] * term[j];
    }
  }
  HomogeneousLift out;
  out.degree = static_cast<int>(d);
  for (std::size_t j = 0; j <= d; ++j) {
    out.c0.emplace_back(Int(e * A[j] - b * B[j]));
    out.c1.emplace_back(Int(a * B[j] - c * A[j]));
  }
  return RationalMapP1::from_lift(out);
}

// Phi(z) = F0^(n)(z,1) F1^(m)(z,1) - F0^(m)(z,1) F1^(n)(z,1), content-free,
// returned with ascending coefficients. Roots are the affine points with
// f^n(z) = f^m(z).
inline std::vector<Int> preperiodicity_polynomial(const RationalMapP1& f, int m,
                                                  int n) {
  if (m < 0 || m >= n) throw std::invalid_argument("need 0 <= m < n");
  HomogeneousLift Fn = iterate_lift(f.lift, n);
  std::vector<Int> a_n = Fn.int_c0(), b_n = Fn.int_c1();
  std::vector<Int> a_m, b_m;
  if (m == 0) {
    a_m = {Int(1), Int(0)};
    b_m = {Int(0), Int(1)};
  } else {
    HomogeneousLift Fm = iterate_lift(f.lift, m);
    a_m = Fm.int_c0();
    b_m = Fm.int_c1();
  }
  std::vector<Int> prod1 = poly_mul(a_n, b_m);
  std::vector<Int> prod2 = poly_mul(a_m, b_n);
  std::vector<Int> desc(prod1.size(), Int(0));
  for (std::size_t i = 0; i < desc.size(); ++i) desc[i] = prod1[i] - prod2[i];
  // dehomogenize at Y=1: descending list as-is; convert to ascending, trim
  std::vector<Int> asc(desc.rbegin(), desc.rend());
  while (asc.size() > 1 && asc.back() == 0) asc.pop_back();
  Int g = 0;
  for (auto& c : asc) g = gcd(g, c);
  if (g > 1)
    for (auto& c : asc) c /= g;
  return asc;
}

}  // namespace adelic
