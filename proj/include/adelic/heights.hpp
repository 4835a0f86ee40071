#pragma once

#include <adelic/green.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

inline BigReal naive_height(const ProjPointQ& x) {
  Int m = std::max(Int(abs(x.a)), Int(abs(x.b)));
  return log(to_real(m));
}

struct HeightValue {
  BigReal value;
  BigReal certified_error;
  std::vector<std::pair<Place, BigReal>> breakdown;  // green corrections
};

// hhat(x) = h_nv(x) + g_arch(x) + sum over bad primes of g_p(x), all for the
// normalized lift and the coprime integer representative of x.
inline HeightValue canonical_height(const RationalMapP1& f, const ProjPointQ& x,
                                    const BigReal& tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  HeightValue out;
  out.value = naive_height(x);
  out.certified_error = 0;
  std::size_t nplaces = 1 + f.bad_primes.size();
  BigReal tol_each = tol / BigReal(static_cast<unsigned>(nplaces));

  Place arch = Place::arch();
  GreenValue ga = green_value(f, x, arch, tol_each);
  out.value += ga.value;
  out.certified_error += ga.error;
  out.breakdown.emplace_back(arch, ga.value);

  for (const Int& p : f.bad_primes) {
    Place v = Place::finite(p);
    GreenValue gp = green_value_finite(f, x, p, tol_each);
    out.value += gp.value;
    out.certified_error += gp.error;
    out.breakdown.emplace_back(v, gp.value);
  }
  return out;
}

// adelic size of the normalized coefficient vector; finite places contribute
// nothing once the integer lift is coprime
inline BigReal hrat(const RationalMapP1& f) {
  Int m = 0;
  for (const Int& c : f.lift.int_c0()) m = std::max(m, Int(abs(c)));
  for (const Int& c : f.lift.int_c1()) m = std::max(m, Int(abs(c)));
  return log(to_real(m));
}

inline BigReal average_height(const RationalMapP1& f, const RationalMapP1& g,
                              const std::vector<ProjPointQ>& points,
                              const BigReal& tol) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  BigReal sum = 0;
  for (const ProjPointQ& x : points) {
    sum += canonical_height(f, x, tol).value;
    sum += canonical_height(g, x, tol).value;
  }
  return sum / BigReal(static_cast<unsigned>(points.size()));
}

// |hhat - h_nv| <= sum_v sup|u_F|_v * d/(d-1); past this the orbit has escaped
inline BigReal height_gap_bound(const RationalMapP1& f) {
  const int d = f.degree();
  BigReal s = sup_uF_bound(f, Place::arch());
  for (const Int& p : f.bad_primes) s += sup_uF_bound(f, Place::finite(p));
  return s * d / (d - 1);
}

struct PreperOrbit {
  bool preperiodic = false;
  long tail_length = 0;   // m
  long cycle_length = 0;  // n - m
  std::vector<ProjPointQ> orbit;
};

inline PreperOrbit is_preperiodic(const RationalMapP1& f, const ProjPointQ& x) {
  PreperOrbit out;
  BigReal gap = height_gap_bound(f);
  std::map<ProjPointQ, long> seen;
  ProjPointQ y = x;
  for (long k = 0;; ++k) {
    auto it = seen.find(y);
    if (it != seen.end()) {
      out.preperiodic = true;
      out.tail_length = it->second;
      out.cycle_length = k - it->second;
      return out;
    }
    if (naive_height(y) > gap) return out;  // hhat(y) > 0, escaped
    seen[y] = k;
    out.orbit.push_back(y);
    y = apply(f, y);
  }
}

}  // namespace adelic
