#pragma once

#include <adelic/heights.hpp>
#include <adelic/roots.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

// ---------------------------------------------------------------------------
// point sets and adelic regularization radii
// ---------------------------------------------------------------------------

struct GaloisSetQ {
  std::vector<ProjPointQ> points;  // affine, distinct

  static GaloisSetQ of(std::vector<ProjPointQ> pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    std::set<ProjPointQ> uniq(pts.begin(), pts.end());
    if (uniq.size() != pts.size())
      throw std::invalid_argument("duplicate points in set");
    for (const auto& p : pts)
      if (p.b == 0) throw std::invalid_argument("point at infinity in set");
    GaloisSetQ e;
    e.points = std::move(pts);
    return e;
  }
  std::size_t size() const { return points.size(); }
};

struct AdelicEpsilon {
  BigReal arch = BigReal(1);
  std::map<Int, BigReal> finite;  // per prime; 1 elsewhere

  BigReal at(const Place& v) const {
    if (v.archimedean) return arch;
    auto it = finite.find(v.prime);
    return it == finite.end() ? BigReal(1) : it->second;
  }
  void validate() const {
    if (!(arch > 0 && arch <= 1))
      throw std::invalid_argument("epsilon out of (0,1]");
    for (auto& [p, e] : finite)
      if (!(e > 0 && e <= 1))
        throw std::invalid_argument("epsilon out of (0,1]");
  }
};

// ---------------------------------------------------------------------------
// complex-coefficient maps (exact maps and pencil members both land here)
// ---------------------------------------------------------------------------

struct CplxMap {
  int d = 0;
  std::vector<Complex> c0, c1;  // descending X-degree, length d+1

  static CplxMap of(const RationalMapP1& f) {
    CplxMap m;
    m.d = f.degree();
    for (const Int& c : f.lift.int_c0()) m.c0.emplace_back(to_real(c), BigReal(0));
    for (const Int& c : f.lift.int_c1()) m.c1.emplace_back(to_real(c), BigReal(0));
    return m;
  }
};

// Sylvester determinant by Gaussian elimination; used only as a degeneracy
// probe for pencil members, never for exact arithmetic
inline BigReal cplx_resultant_abs(const CplxMap& f) {
  const int d = f.d;
  const int n = 2 * d;
  std::vector<std::vector<Complex>> m(
      n, std::vector<Complex>(n, Complex(BigReal(0), BigReal(0))));
  for (int r = 0; r < d; ++r)
    for (int k = 0; k <= d; ++k) {
      m[r][r + k] = f.c0[k];
      m[d + r][r + k] = f.c1[k];
    }
  BigReal det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
    if (abs(m[piv][col]) == 0) return BigReal(0);
    if (piv != col) std::swap(m[piv], m[col]);
    det *= abs(m[col][col]);
    for (int r = col + 1; r < n; ++r) {
      Complex factor = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] = m[r][k] - factor * m[col][k];
    }
  }
  return det;
}

// affine coefficients of F0(z,1) - w F1(z,1), ascending
inline std::vector<Complex> preimage_poly(const CplxMap& f, const Complex& w) {
  std::vector<Complex> c(f.d + 1, Complex(BigReal(0), BigReal(0)));
  for (int k = 0; k <= f.d; ++k) {
    // coefficient of z^{d-k}
    c[f.d - k] = f.c0[k] - w * f.c1[k];
  }
  return c;
}

struct MeasureSample {
  std::vector<Complex> atoms;          // d^depth atoms, weight 1/M each
  std::vector<Complex> atoms_previous; // depth-1 level, for error estimates
  int depth = 0;
  std::string source;
};

inline MeasureSample equilibrium_sample(const CplxMap& f, const Complex& seed,
                                        int depth, const std::string& source) {
  double total = std::pow(static_cast<double>(f.d), depth);
  if (total > 1e6) throw std::invalid_argument("pullback depth too large");
  BigReal scale = 0;
  for (auto& c : f.c0) scale = std::max(scale, abs(c));
  for (auto& c : f.c1) scale = std::max(scale, abs(c));
  BigReal degenerate_cut = scale * pow(BigReal(2), -static_cast<int>(precision_bits()) / 2);

  MeasureSample out;
  out.depth = depth;
  out.source = source;
  out.atoms = {seed};
  for (int level = 0; level < depth; ++level) {
    std::vector<Complex> next;
    next.reserve(out.atoms.size() * f.d);
    for (const Complex& w : out.atoms) {
      std::vector<Complex> poly = preimage_poly(f, w);
      if (abs(poly.back()) <= degenerate_cut)
        throw std::runtime_error(
            "pullback degenerates at depth " + std::to_string(level + 1) +
            ": leading coefficient " + abs(poly.back()).str(6) +
            " (seed too close to the critical value at infinity)");
      RootSet roots = complex_roots(poly);
      if (!roots.converged)
        throw std::runtime_error("root refinement did not converge at depth " +
                                 std::to_string(level + 1));
      for (auto& r : roots.roots) next.push_back(r);
    }
    if (level == depth - 1) out.atoms_previous = out.atoms;
    out.atoms = std::move(next);
  }
  if (depth == 0) out.atoms_previous = out.atoms;
  return out;
}

// ---------------------------------------------------------------------------
// discrete mutual energy
// ---------------------------------------------------------------------------

struct EnergyEstimate {
  BigReal value;
  BigReal error;  // heuristic: depth-(n-1) vs depth-n difference
  int depth = 0;
  bool heuristic = true;
};

namespace detail {

// sum over ordered pairs, zero distances excluded
inline BigReal pair_log_sum(const std::vector<Complex>& a,
                            const std::vector<Complex>& b, bool same,
                            const BigReal& eps) {
  BigReal s = 0;
  BigReal log_eps = log(eps);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (same && i == j) continue;
      BigReal r = abs(a[i] - b[j]);
      if (r == 0) continue;
      s += r >= eps ? log(r) : log_eps;
    }
  return s;
}

inline BigReal signed_energy(const std::vector<Complex>& a,
                             const std::vector<Complex>& b,
                             const BigReal& eps) {
  BigReal ma(static_cast<unsigned>(a.size()));
  BigReal mb(static_cast<unsigned>(b.size()));
  BigReal saa = pair_log_sum(a, a, true, eps);
  BigReal sbb = pair_log_sum(b, b, true, eps);
  BigReal sab = pair_log_sum(a, b, false, eps);
  return -(saa / (ma * ma) + sbb / (mb * mb) - 2 * sab / (ma * mb));
}

inline Complex random_seed_point(Rng& rng) {
  // generic complex seed; nonreal so it avoids the rational exceptional
  // points of the maps under test
  return Complex(BigReal(rng.next_range(-2.0, 2.0)),
                 BigReal(rng.next_range(0.25, 2.0)));
}

}  // namespace detail

// explicit seed point, for conjugation experiments with matched atom sets
inline EnergyEstimate mutual_energy_arch_at(const CplxMap& f, const CplxMap& g,
                                            const Complex& z0, int depth,
                                            const BigReal& eps) {
  if (!(eps > 0)) throw std::invalid_argument("regularization must be positive");
  MeasureSample sf = equilibrium_sample(f, z0, depth, "f");
  MeasureSample sg = equilibrium_sample(g, z0, depth, "g");
  EnergyEstimate out;
  out.depth = depth;
  out.value = detail::signed_energy(sf.atoms, sg.atoms, eps);
  BigReal prev = detail::signed_energy(sf.atoms_previous, sg.atoms_previous, eps);
  out.error = abs(out.value - prev);
  return out;
}

inline EnergyEstimate mutual_energy_arch(const CplxMap& f, const CplxMap& g,
                                         int depth, const BigReal& eps,
                                         std::uint64_t seed) {
  Rng rng(seed);
  return mutual_energy_arch_at(f, g, detail::random_seed_point(rng), depth, eps);
}

inline EnergyEstimate mutual_energy_arch(const RationalMapP1& f,
                                         const RationalMapP1& g, int depth,
                                         const BigReal& eps,
                                         std::uint64_t seed) {
  return mutual_energy_arch(CplxMap::of(f), CplxMap::of(g), depth, eps, seed);
}

// archimedean local contribution, half the discrete pairing; heuristic
inline EnergyEstimate pairing_lower_arch(const RationalMapP1& f,
                                         const RationalMapP1& g, int depth,
                                         const BigReal& eps,
                                         std::uint64_t seed) {
  EnergyEstimate e = mutual_energy_arch(f, g, depth, eps, seed);
  e.value /= 2;
  e.error /= 2;
  return e;
}

// ---------------------------------------------------------------------------
// regularized energy of a finite set
// ---------------------------------------------------------------------------

namespace detail {

// circle-average correction: for r < 2 eps the potential of the radius-eps
// circle mass at y, integrated against the circle mass at x, exceeds
// log max(r, eps) by (1/2pi) int_{-t0}^{t0} [log eps - log|r - eps e^{it}|] dt
inline BigReal circle_overlap_correction(const BigReal& r, const BigReal& eps) {
  BigReal ratio = r / (2 * eps);
  BigReal t0 = acos(ratio);
  if (t0 <= 0) return BigReal(0);

  // 16-point Gauss-Legendre nodes/weights on [-1,1]
  static const char* kNodes[8] = {
      "0.0950125098376374401853193", "0.2816035507792589132304605",
      "0.4580167776572273863424194", "0.6178762444026437484466718",
      "0.7554044083550030338951012", "0.8656312023878317438804679",
      "0.9445750230732325760779884", "0.9894009349916499325961542"};
  static const char* kWeights[8] = {
      "0.1894506104550684962853967", "0.1826034150449235888667637",
      "0.1691565193950025381893121", "0.1495959888165767320815017",
      "0.1246289712555338720524763", "0.0951585116824927848099251",
      "0.0622535239386478928628438", "0.0271524594117540948517806"};

  auto integrand = [&](const BigReal& t) {
    BigReal d2 = r * r - 2 * r * eps * cos(t) + eps * eps;
    return log(eps) - log(d2) / 2;
  };
  auto panel = [&](const BigReal& lo, const BigReal& hi) {
    BigReal mid = (lo + hi) / 2, half = (hi - lo) / 2, s = 0;
    for (int k = 0; k < 8; ++k) {
      BigReal x(kNodes[k]), w(kWeights[k]);
      s += w * (integrand(mid + half * x) + integrand(mid - half * x));
    }
    return s * half;
  };

  // dyadic panels toward t = 0 absorb the log singularity at r = eps
  BigReal total = 0;
  BigReal hi = t0;
  for (int k = 0; k < 64; ++k) {
    BigReal lo = hi / 2;
    total += panel(lo, hi);
    hi = lo;
  }
  // remainder over [0, hi]: integrand <= log(pi) - log(theta) there
  total += hi * (log(pi_value()) - log(hi) + 1);
  return total / pi_value();
}

// mutual potential of two radius-eps circle masses at distance r
inline BigReal arch_pair_kernel(const BigReal& r, const BigReal& eps) {
  BigReal base = r >= eps ? log(r) : log(eps);
  if (r < 2 * eps) base += circle_overlap_correction(r, eps);
  return base;
}

}  // namespace detail

struct SetEnergyReport {
  BigReal lhs;  // regularized self-energy of the spread-out set
  BigReal rhs;  // (1/#E) sum_v log(eps_v)
};

inline SetEnergyReport regularized_set_energy(const GaloisSetQ& e,
                                              const AdelicEpsilon& eps) {
  eps.validate();
  const std::size_t n = e.size();
  BigReal inv_n2 = BigReal(1) / BigReal(static_cast<unsigned>(n * n));

  BigReal diag = log(eps.arch);
  for (auto& [p, ep] : eps.finite) diag += log(ep);

  BigReal lhs = BigReal(static_cast<unsigned>(n)) * diag;  // self-terms
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational diff = e.points[i].affine() - e.points[j].affine();
      lhs += detail::arch_pair_kernel(abs(to_real(diff)), eps.arch);
      // finite places: log max(|diff|_p, eps_p); outside the support of eps
      // the positive parts sum to log(denominator)
      BigReal fin = log(to_real(Int(denominator(diff))));
      for (auto& [p, ep] : eps.finite) {
        long w = valuation(diff, p);
        BigReal logp = log(to_real(p));
        if (w < 0) fin -= BigReal(-w) * logp;  // already counted in the denominator
        BigReal absd = exp(BigReal(-w) * logp);
        fin += absd >= ep ? BigReal(-w) * logp : log(ep);
      }
      lhs += fin;
    }
  lhs *= inv_n2;

  SetEnergyReport rep;
  rep.lhs = lhs;
  rep.rhs = diag / BigReal(static_cast<unsigned>(n));
  return rep;
}

// ---------------------------------------------------------------------------
// pairing upper bound from the certificates
// ---------------------------------------------------------------------------

struct PairingBoundReport {
  BigReal delta;
  struct PlaceTerm {
    Place place;
    BigReal constant;   // C_v for the half-sum metric
    BigReal exponent;   // alpha_v for the half-sum metric
    BigReal epsilon;    // chosen regularization radius
    BigReal contribution;
  };
  std::vector<PlaceTerm> per_place_terms;
  BigReal holder_term;
  BigReal height_term;
  BigReal total_upper_bound;   // holder_term + height_term
  BigReal generic_a;           // closed-form constant 4 c3 (d1 + d2 + 1)
  BigReal generic_total;       // loose closed-form bound with that constant
};

inline PairingBoundReport split_bound(const RationalMapP1& f,
                                      const RationalMapP1& g,
                                      const GaloisSetQ& e, const BigReal& delta,
                                      const BigReal& tol) {
  if (!(delta > 0 && delta < 1))
    throw std::invalid_argument("delta must lie in (0,1)");
  PairingBoundReport rep;
  rep.delta = delta;
  BigReal ne(static_cast<unsigned>(e.size()));

  std::set<Int> primes(f.bad_primes.begin(), f.bad_primes.end());
  primes.insert(g.bad_primes.begin(), g.bad_primes.end());
  std::vector<Place> places = {Place::arch()};
  for (const Int& p : primes) places.push_back(Place::finite(p));

  rep.holder_term = 0;
  for (const Place& v : places) {
    HolderCertificate cf = holder_certificate(f, v);
    HolderCertificate cg = holder_certificate(g, v);
    PairingBoundReport::PlaceTerm term;
    term.place = v;
    // half-sum metric: average the constants, add the exponent reciprocals
    term.constant = (cf.constant + cg.constant) / 2;
    if (cf.constant == 0 && cg.constant == 0)
      term.exponent = 1;
    else if (cf.constant == 0)
      term.exponent = cg.exponent;
    else if (cg.constant == 0)
      term.exponent = cf.exponent;
    else
      term.exponent = 1 / (1 / cf.exponent + 1 / cg.exponent);
    if (term.constant > 1) {
      term.epsilon = exp(log(delta) / term.exponent);
      term.contribution =
          4 * log(term.constant) * exp(term.exponent * log(term.epsilon)) -
          log(term.epsilon) / ne;
    } else {
      term.epsilon = 1;
      term.contribution = term.constant > 0 ? 4 * log(term.constant) : BigReal(0);
    }
    rep.holder_term += term.contribution;
    rep.per_place_terms.push_back(term);
  }

  rep.height_term = average_height(f, g, e.points, tol);
  rep.total_upper_bound = rep.holder_term + rep.height_term;

  // closed form with the generic constant; the instance c3 stands in for the
  // degree-only constant, so the remaining slack is unpinned
  BigReal c3 = std::max(local_green_params(f, Place::arch()).c3,
                        local_green_params(g, Place::arch()).c3);
  c3 = std::max(c3, BigReal(1));
  int dsum = f.degree() + g.degree() + 1;
  rep.generic_a = 4 * c3 * dsum;
  rep.generic_total =
      rep.generic_a * (delta - log(delta) / ne) * (hrat(f) + hrat(g) + 1) +
      rep.height_term;
  return rep;
}

// ---------------------------------------------------------------------------
// parameter-space potential U along a pencil
// ---------------------------------------------------------------------------

struct PencilCoeff {
  Rational base;   // constant part
  Rational slope;  // coefficient of t
};

struct PencilMap {
  int d = 0;
  std::vector<PencilCoeff> c0, c1;  // descending X-degree

  CplxMap at(const Complex& t) const {
    CplxMap m;
    m.d = d;
    for (const auto& c : c0)
      m.c0.push_back(Complex(to_real(c.base), BigReal(0)) + to_real(c.slope) * t);
    for (const auto& c : c1)
      m.c1.push_back(Complex(to_real(c.base), BigReal(0)) + to_real(c.slope) * t);
    return m;
  }
};

struct UScanRow {
  BigReal re, im;
  BigReal u, err;
  bool degenerate = false;
};

inline std::vector<UScanRow> u_parameter_scan(
    const PencilMap& f1, const PencilMap& f2, const BigReal& re0,
    const BigReal& re1, int nre, const BigReal& im0, const BigReal& im1,
    int nim, int depth, const BigReal& eps, std::uint64_t seed) {
  std::vector<UScanRow> rows;
  long degenerate_count = 0;
  for (int i = 0; i < nre; ++i)
    for (int j = 0; j < nim; ++j) {
      UScanRow row;
      row.re = nre == 1 ? re0 : re0 + (re1 - re0) * i / (nre - 1);
      row.im = nim == 1 ? im0 : im0 + (im1 - im0) * j / (nim - 1);
      Complex t(row.re, row.im);
      CplxMap m1 = f1.at(t), m2 = f2.at(t);
      BigReal cut = pow(BigReal(2), -static_cast<int>(precision_bits()) / 2);
      if (cplx_resultant_abs(m1) <= cut || cplx_resultant_abs(m2) <= cut) {
        row.degenerate = true;
        ++degenerate_count;
      } else {
        EnergyEstimate est = mutual_energy_arch(m1, m2, depth, eps, seed);
        row.u = est.value;
        row.err = est.error;
      }
      rows.push_back(row);
    }
  if (degenerate_count == static_cast<long>(rows.size()))
    throw std::runtime_error("every grid point is degenerate");
  return rows;
}

// ---------------------------------------------------------------------------
// exceptional pairs: monomial and Chebyshev detection
// ---------------------------------------------------------------------------

// ascending coefficients of the degree-n Chebyshev-like polynomial with
// C_n(z + 1/z) = z^n + 1/z^n
inline std::vector<Rational> chebyshev_coeffs(int n) {
  std::vector<Rational> prev = {Rational(2)};         // C_0
  std::vector<Rational> cur = {Rational(0), Rational(1)};  // C_1
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    std::vector<Rational> next(k + 1, Rational(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

enum class PairClass { kExceptionalMonomial, kExceptionalChebyshev, kNotDetected };

struct PairClassification {
  PairClass cls = PairClass::kNotDetected;
  std::string note;
};

namespace detail {

// a z^d or a z^-d pattern; fills the scalar and the power sign
inline bool monomial_form(const HomogeneousLift& lift, Rational& scalar,
                          bool& inverted) {
  const int d = lift.degree;
  auto only = [&](const std::vector<Rational>& c, int k) {
    for (int i = 0; i <= d; ++i)
      if (i != k && c[i] != 0) return false;
    return c[k] != 0;
  };
  if (only(lift.c0, 0) && only(lift.c1, d)) {
    scalar = lift.c0[0] / lift.c1[d];
    inverted = false;
    return true;
  }
  if (only(lift.c0, d) && only(lift.c1, 0)) {
    scalar = lift.c0[d] / lift.c1[0];
    inverted = true;
    return true;
  }
  return false;
}

// affine coefficients (ascending) when f is a polynomial map
inline bool polynomial_form(const RationalMapP1& f, std::vector<Rational>& out) {
  const int d = f.degree();
  for (int i = 0; i < d; ++i)
    if (f.lift.c1[i] != 0) return false;
  Rational lead = f.lift.c1[d];
  out.assign(d + 1, Rational(0));
  for (int k = 0; k <= d; ++k) out[k] = f.lift.c0[d - k] / lead;
  return true;
}

// monic-and-centered normal forms reachable by a rational affine change of
// coordinates z -> lambda z + mu; both lambda branches matter for odd maps
inline std::vector<std::pair<Rational, std::vector<Rational>>> monic_centered_forms(
    const std::vector<Rational>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<Rational> lambdas;
  if (d == 2) {
    lambdas.push_back(1 / a[2]);
  } else {
    // lambda^{d-1} = 1/a_d; rational-root extraction via numerator and
    // denominator being perfect (d-1)-th powers
    Rational target = 1 / a[d];
    Int num = numerator(target), den = denominator(target);
    Int rn, rd;
    bool sign_flip = num < 0;
    if (sign_flip && (d - 1) % 2 == 0) return {};
    Int anum = abs(num);
    mpz_t root;
    mpz_init(root);
    bool exact = mpz_root(root, anum.backend().data(), d - 1) != 0;
    rn = Int(root);
    exact = exact && mpz_root(root, den.backend().data(), d - 1) != 0;
    rd = Int(root);
    mpz_clear(root);
    if (!exact) return {};
    Rational lam(rn, rd);
    if (sign_flip) lam = -lam;
    lambdas.push_back(lam);
    if ((d - 1) % 2 == 0) lambdas.push_back(-lam);
  }
  std::vector<std::pair<Rational, std::vector<Rational>>> out;
  for (const Rational& lam : lambdas) {
    Rational mu = -a[d - 1] / (d * a[d]);
    // g(z) = (f(lambda z + mu) - mu) / lambda, expanded exactly
    std::vector<Rational> acc = {a[d]};
    for (int k = d - 1; k >= 0; --k) {
      std::vector<Rational> next(acc.size() + 1, Rational(0));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i] * mu;
        next[i + 1] += acc[i] * lam;
      }
      next[0] += a[k];
      acc = std::move(next);
    }
    acc[0] -= mu;
    for (auto& c : acc) c /= lam;
    out.emplace_back(lam, std::move(acc));
  }
  return out;
}

}  // namespace detail

inline PairClassification exceptional_pair_lookup(const RationalMapP1& f,
                                                  const RationalMapP1& g) {
  PairClassification out;
  Rational sf, sg;
  bool invf, invg;
  if (detail::monomial_form(f.lift, sf, invf) &&
      detail::monomial_form(g.lift, sg, invg)) {
    // both measures are round circles with radius |a|^{-1/(d-1)}; compare
    // |a1|^{d2-1} against |a2|^{d1-1}
    Rational lf = abs(sf), lg = abs(sg);
    Rational pow1 = 1, pow2 = 1;
    for (int i = 0; i < g.degree() - 1; ++i) pow1 *= lf;
    for (int i = 0; i < f.degree() - 1; ++i) pow2 *= lg;
    if (pow1 == pow2) {
      out.cls = PairClass::kExceptionalMonomial;
      out.note = "both maps are monomial with a common invariant circle";
      return out;
    }
    out.note = "monomial maps with distinct invariant circles";
    return out;
  }

  std::vector<Rational> af, ag;
  if (detail::polynomial_form(f, af) && detail::polynomial_form(g, ag)) {
    auto formsf = detail::monic_centered_forms(af);
    auto formsg = detail::monic_centered_forms(ag);
    std::vector<Rational> chf = chebyshev_coeffs(f.degree());
    std::vector<Rational> chg = chebyshev_coeffs(g.degree());
    for (auto& [lamf, nf] : formsf)
      for (auto& [lamg, ng] : formsg) {
        if (lamf != lamg) continue;  // need one common change of coordinates
        if (nf == chf && ng == chg) {
          out.cls = PairClass::kExceptionalChebyshev;
          out.note = "both maps conjugate to Chebyshev polynomials in the "
                     "same coordinate";
          return out;
        }
      }
  }
  out.note = "no monomial or Chebyshev match; Lattes pairs are not "
             "recognized (unknown)";
  return out;
}

}  // namespace adelic
