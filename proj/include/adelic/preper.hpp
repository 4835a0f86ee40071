#pragma once

#include <adelic/energy.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

struct PreperRecord {
  ProjPointQ point;
  PreperOrbit orbit;
  PreperRecord() : point(Int(0), Int(1)) {}
};

// all preperiodic x in P^1(Q) with naive height <= bound
inline std::vector<PreperRecord> rational_preperiodic_points(
    const RationalMapP1& f, const BigReal& height_bound) {
  if (height_bound < 0) throw std::invalid_argument("negative height bound");
  long box = static_cast<long>(std::floor(
      exp(height_bound).convert_to<double>() * (1 + 1e-12)));
  std::vector<PreperRecord> out;
  auto consider = [&](const ProjPointQ& x) {
    PreperOrbit orb = is_preperiodic(f, x);
    if (!orb.preperiodic) return;
    PreperRecord rec;
    rec.point = x;
    rec.orbit = std::move(orb);
    out.push_back(std::move(rec));
  };
  consider(ProjPointQ::infinity());
  for (long q = 1; q <= box; ++q)
    for (long p = -box; p <= box; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      consider(ProjPointQ(Int(p), Int(q)));
    }
  return out;
}

inline std::vector<PreperRecord> common_rational_preperiodic(
    const RationalMapP1& f, const RationalMapP1& g,
    const BigReal& height_bound) {
  std::vector<PreperRecord> out;
  for (PreperRecord& rec : rational_preperiodic_points(f, height_bound)) {
    if (is_preperiodic(g, rec.point).preperiodic) out.push_back(std::move(rec));
  }
  return out;
}

struct ComplexPreperSpectrum {
  int m = 0, n = 0;
  std::vector<Complex> roots;
  std::vector<BigReal> residuals;
  std::vector<bool> refined;  // per-root convergence flag
  bool includes_infinity = false;
};

inline ComplexPreperSpectrum complex_preperiodic(const RationalMapP1& f, int m,
                                                 int n) {
  ComplexPreperSpectrum out;
  out.m = m;
  out.n = n;
  std::vector<Int> phi = preperiodicity_polynomial(f, m, n);
  std::vector<Complex> c;
  for (const Int& a : phi) c.emplace_back(to_real(a), BigReal(0));
  RootSet roots = complex_roots(c);
  out.roots = std::move(roots.roots);
  out.residuals = std::move(roots.residuals);
  BigReal ok = pow(BigReal(2), -static_cast<int>(precision_bits()) / 4);
  for (const BigReal& r : out.residuals) out.refined.push_back(r <= ok);
  PreperOrbit inf_orbit = is_preperiodic(f, ProjPointQ::infinity());
  out.includes_infinity = inf_orbit.preperiodic;
  return out;
}

struct NumericMatch {
  Complex value_f, value_g;
  BigReal separation;
  BigReal residual_f, residual_g;
  BigReal green_f, green_g;  // archimedean plausibility scores
};

struct CommonPreperReport {
  std::vector<NumericMatch> matches;  // candidates only, never theorems
  PairClassification pair_class;
};

inline CommonPreperReport common_preperiodic_numeric(const RationalMapP1& f,
                                                     const RationalMapP1& g,
                                                     int max_tail,
                                                     int max_cycle,
                                                     const BigReal& match_tol) {
  if (max_tail < 0 || max_cycle < 1)
    throw std::invalid_argument("need max_tail >= 0 and max_cycle >= 1");
  auto spectrum = [&](const RationalMapP1& h) {
    std::vector<std::pair<Complex, BigReal>> pts;  // root, residual
    for (int m = 0; m <= max_tail; ++m)
      for (int k = 1; k <= max_cycle; ++k) {
        if (std::pow(static_cast<double>(h.degree()), m + k) > 4096) continue;
        ComplexPreperSpectrum s = complex_preperiodic(h, m, m + k);
        for (std::size_t i = 0; i < s.roots.size(); ++i)
          pts.emplace_back(s.roots[i], s.residuals[i]);
      }
    return pts;
  };
  auto sf = spectrum(f);
  auto sg = spectrum(g);

  CommonPreperReport rep;
  rep.pair_class = exceptional_pair_lookup(f, g);
  LocalGreenParams pf = local_green_params(f, Place::arch());
  LocalGreenParams pg = local_green_params(g, Place::arch());
  BigReal green_tol("1e-15");
  for (auto& [a, ra] : sf)
    for (auto& [b, rb] : sg) {
      BigReal sep = abs(a - b);
      if (sep > match_tol) continue;
      bool dup = false;
      for (const NumericMatch& m : rep.matches)
        if (abs(m.value_f - a) <= match_tol && abs(m.value_g - b) <= match_tol) {
          dup = true;
          break;
        }
      if (dup) continue;
      NumericMatch m;
      m.value_f = a;
      m.value_g = b;
      m.separation = sep;
      m.residual_f = ra;
      m.residual_g = rb;
      m.green_f = green_value_arch(f, ProjPointC::from_affine(a), green_tol, pf).value;
      m.green_g = green_value_arch(g, ProjPointC::from_affine(b), green_tol, pg).value;
      rep.matches.push_back(std::move(m));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// explicit uniform-bound calculator
// ---------------------------------------------------------------------------

struct UniformBoundInputs {
  BigReal c;        // height-inequality slope, > 0
  BigReal c_prime;  // height-inequality offset, >= 0
  BigReal c1;       // energy-inequality constant, >= 1
  BigReal c2;       // energy-inequality constant, >= 0
  BigReal eps;      // pairing lower bound, > 0
  long deg = 0;     // fiber degree

  void validate() const {
    if (!(c > 0)) throw std::invalid_argument("need C > 0");
    if (c_prime < 0) throw std::invalid_argument("need C' >= 0");
    if (c1 < 1) throw std::invalid_argument("need C1 >= 1");
    if (c2 < 0) throw std::invalid_argument("need C2 >= 0");
    if (!(eps > 0)) throw std::invalid_argument("need eps > 0");
    if (deg < 0) throw std::invalid_argument("need deg >= 0");
  }
};

struct UniformBoundResult {
  BigReal b;                // B = C1 (4(C' + C C2 + eps/2)/C + 2 C2)
  BigReal branch_escape;    // 4B/eps log(4B/eps)
  BigReal branch_small;     // 4C1/C log(2C1/C)
  long n = 0;               // ceil(max of branches) + deg
  BigReal height_threshold; // 4(C' + C C2 + eps/2)/C + C2
  BigReal delta_escape;     // eps/(4B)
  BigReal delta_small;      // C/(2 C1)
  bool escape_branch_dominates = false;
};

inline UniformBoundResult uniform_bound_calculator(const UniformBoundInputs& in) {
  in.validate();
  UniformBoundResult out;
  BigReal core = 4 * (in.c_prime + in.c * in.c2 + in.eps / 2) / in.c;
  out.b = in.c1 * (core + 2 * in.c2);
  out.height_threshold = core + in.c2;
  out.branch_escape = 4 * out.b / in.eps * log(4 * out.b / in.eps);
  out.branch_small = 4 * in.c1 / in.c * log(2 * in.c1 / in.c);
  out.delta_escape = in.eps / (4 * out.b);
  out.delta_small = in.c / (2 * in.c1);
  BigReal top = std::max(out.branch_escape, out.branch_small);
  out.escape_branch_dominates = out.branch_escape >= out.branch_small;
  out.n = static_cast<long>(std::ceil(top.convert_to<double>() - 1e-12)) + in.deg;
  return out;
}

}  // namespace adelic
