// Acceptance harness: one criterion per invocation (argv[1] in 1..12),
// or all in sequence when no argument is given.  Each criterion prints a
// single PASS/FAIL line with its pinned tolerance and runtime budget.

#include <adelic/preper.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace adelic;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int index;
  std::string label;
  double budget_seconds;
  bool (*body)(std::string& detail);
};

HomogeneousLift lift_of(std::vector<Rational> c0, std::vector<Rational> c1) {
  HomogeneousLift L;
  L.degree = static_cast<int>(c0.size()) - 1;
  L.c0 = std::move(c0);
  L.c1 = std::move(c1);
  return L;
}

RationalMapP1 map_z2() {
  return RationalMapP1::from_lift(lift_of({1, 0, 0}, {0, 0, 1}));
}
RationalMapP1 map_z2m2() {
  return RationalMapP1::from_lift(lift_of({1, 0, -2}, {0, 0, 1}));
}

RationalMapP1 random_map(Rng& rng, int d, long box) {
  while (true) {
    std::vector<Rational> c0, c1;
    for (int i = 0; i <= d; ++i) {
      c0.emplace_back(rng.next_int(-box, box));
      c1.emplace_back(rng.next_int(-box, box));
    }
    HomogeneousLift L = lift_of(c0, c1);
    if (L.is_zero() || resultant(L) == 0) continue;
    return RationalMapP1::from_lift(L);
  }
}

RationalMapP1 random_poly_map(Rng& rng, int d, long box) {
  while (true) {
    std::vector<Rational> asc;
    for (int k = 0; k <= d; ++k) asc.emplace_back(rng.next_int(-box, box));
    if (asc.back() == 0) continue;
    return polynomial_map(asc);
  }
}

Rational random_rational(Rng& rng) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  Rational x = rng.next_unit() < 0.5 ? Rational(1) : Rational(-1);
  for (int i = 0; i < 8; ++i) {
    long p = primes[rng.next_int(0, 9)];
    long e = rng.next_int(-3, 3);
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
      if (e < 0)
        x /= p;
      else
        x *= p;
    }
  }
  return x;
}

// 1. product formula at 256 bits
bool crit_product_formula(std::string& detail) {
  set_precision_bits(256);
  Rng rng(1);
  BigReal tiny = pow(BigReal(2), -240);
  BigReal worst = 0;
  for (int i = 0; i < 1000; ++i) {
    BigReal r = abs(product_formula_residual(random_rational(rng)));
    if (r > worst) worst = r;
    if (r > tiny) {
      detail = "residual " + r.str(6) + " > 2^-240";
      return false;
    }
  }
  detail = "1000 rationals, max residual " + worst.str(4) + " <= 2^-240";
  return true;
}

// 2. canonical-height functional equation
bool crit_height_functional(std::string& detail) {
  set_precision_bits(256);
  Rng rng(2);
  BigReal tol("1e-30");
  BigReal worst = 0;
  for (int i = 0; i < 100; ++i) {
    int d = 2 + static_cast<int>(rng.next_int(0, 1));
    RationalMapP1 f = random_map(rng, d, 20);
    ProjPointQ x(rng.next_int(-20, 20), rng.next_int(1, 20));
    BigReal hx = canonical_height(f, x, tol).value;
    BigReal hfx = canonical_height(f, apply(f, x), tol).value;
    BigReal gap = abs(hfx - d * hx);
    if (gap > worst) worst = gap;
    if (gap > (d + 1) * tol) {
      detail = "map " + std::to_string(i) + ": |h(fx) - d h(x)| = " + gap.str(6);
      return false;
    }
  }
  detail = "100 maps, max |h(fx) - d h(x)| = " + worst.str(4) +
           " <= (d+1)e-30";
  return true;
}

// 3. monomial exactness
bool crit_monomial_exact(std::string& detail) {
  set_precision_bits(256);
  Rng rng(3);
  RationalMapP1 f = map_z2();
  BigReal tol("1e-30");
  for (int i = 0; i < 100; ++i) {
    ProjPointQ x(rng.next_int(-1000, 1000), rng.next_int(1, 1000));
    BigReal h = canonical_height(f, x, tol).value;
    if (abs(h - naive_height(x)) > tol) {
      detail = "point " + std::to_string(i) + " deviates";
      return false;
    }
  }
  detail = "100 points, |hhat - log max(|p|,|q|)| <= 1e-30";
  return true;
}

// 4. good-reduction vanishing
bool crit_good_reduction(std::string& detail) {
  set_precision_bits(128);
  Rng rng(4);
  BigReal tol("1e-20");
  static const long pool[] = {3, 5, 7, 11, 13, 17, 19, 23};
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    RationalMapP1 f = random_map(rng, 2 + static_cast<int>(rng.next_int(0, 1)), 9);
    int found = 0;
    for (long p : pool) {
      if (found == 3) break;
      if (valuation(f.res, p) != 0) continue;
      ++found;
      for (int k = 0; k < 50; ++k) {
        ProjPointQ x(rng.next_int(-100, 100), rng.next_int(1, 100));
        GreenValue g = green_value_finite(f, x, p, tol);
        if (!(g.value == 0 && g.exact)) {
          detail = "nonzero green value at p = " + std::to_string(p);
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " exact zeros at good primes";
  return true;
}

// 5. Holder certificates: soundness plus falsifiability
bool crit_holder(std::string& detail) {
  set_precision_bits(128);
  Rng rng(5);
  BigReal tol("1e-10");
  for (int i = 0; i < 20; ++i) {
    RationalMapP1 f = random_map(rng, 2 + static_cast<int>(rng.next_int(0, 1)), 9);
    std::vector<Place> places = {Place::arch()};
    for (const Int& p : f.bad_primes) places.push_back(Place::finite(p));
    for (const Place& v : places) {
      HolderCertificate cert = holder_certificate(f, v);
      HolderVerifyReport rep = holder_verify(f, v, cert, 10000, 50 + i, tol);
      if (!rep.passed) {
        detail = "map " + std::to_string(i) + " fails at " + place_name(v) +
                 ": " + rep.witness;
        return false;
      }
    }
  }
  HolderCertificate bad = holder_certificate(map_z2m2(), Place::arch());
  bad.constant /= 10;
  HolderVerifyReport rep = holder_verify(map_z2m2(), Place::arch(), bad, 10000,
                                         1, tol);
  if (rep.passed) {
    detail = "corrupted certificate (C/10) was not rejected";
    return false;
  }
  detail = "20 maps x 10^4 pairs pass at arch + bad primes; corrupted C/10 "
           "rejected with witness";
  return true;
}

// 6. preperiodic enumeration at desk scale
bool crit_preper(std::string& detail) {
  set_precision_bits(256);
  auto recs = common_rational_preperiodic(map_z2(), map_z2m2(), log(BigReal(10)));
  std::set<ProjPointQ> got;
  for (auto& r : recs) got.insert(r.point);
  std::set<ProjPointQ> want = {ProjPointQ::infinity(), ProjPointQ(0, 1),
                               ProjPointQ(1, 1), ProjPointQ(-1, 1)};
  if (got != want) {
    detail = "wrong intersection, " + std::to_string(got.size()) + " points";
    return false;
  }
  BigReal tol("1e-30"), cap("1e-20");
  for (auto& r : recs) {
    if (r.point.is_infinity()) continue;
    if (canonical_height(map_z2(), r.point, tol).value > cap ||
        canonical_height(map_z2m2(), r.point, tol).value > cap) {
      detail = "canonical height above 1e-20";
      return false;
    }
  }
  detail = "common preperiodic set = {inf, 0, 1, -1}, heights <= 1e-20";
  return true;
}

// 7. Lemma-energy property test
bool crit_set_energy(std::string& detail) {
  set_precision_bits(128);
  Rng rng(7);
  static const long primes[] = {2, 3, 5, 7};
  BigReal slack("-1e-10"), worst = 1;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ProjPointQ> pts;
    int n = 1 + static_cast<int>(rng.next_int(0, 5));
    while (static_cast<int>(pts.size()) < n) {
      ProjPointQ x(rng.next_int(-15, 15), rng.next_int(1, 15));
      bool dup = false;
      for (auto& y : pts) dup = dup || y == x;
      if (!dup) pts.push_back(x);
    }
    AdelicEpsilon eps;
    int non_one = static_cast<int>(rng.next_int(0, 3));
    if (non_one > 0) eps.arch = BigReal(rng.next_range(0.05, 1.0));
    for (int i = 1; i < non_one; ++i)
      eps.finite[Int(primes[rng.next_int(0, 3)])] =
          BigReal(1) / Int(1 + rng.next_int(1, 9));
    SetEnergyReport rep = regularized_set_energy(GaloisSetQ::of(pts), eps);
    BigReal margin = rep.lhs - rep.rhs;
    if (margin < worst) worst = margin;
    if (margin < slack) {
      detail = "trial " + std::to_string(trial) + ": lhs - rhs = " + margin.str(6);
      return false;
    }
  }
  detail = "200 configurations, min(lhs - rhs) = " + worst.str(4) + " >= -1e-10";
  return true;
}

// 8. mutual-energy oracle
bool crit_energy_oracle(std::string& detail) {
  set_precision_bits(128);
  // closed form for (unit circle) vs (arcsine on [-2,2]):
  // (4/pi) * int_0^{pi/3} log(2 cos t) dt
  BigReal oracle("0.646131894438901");
  EnergyEstimate est = mutual_energy_arch(map_z2(), map_z2m2(), 9,
                                          BigReal("1e-12"), 7);
  BigReal rel = abs(est.value - oracle) / oracle;
  detail = "depth 9: " + est.value.str(8) + " vs oracle " + oracle.str(8) +
           ", relative gap " + rel.str(4);
  return rel < BigReal("0.05");
}

// 9. Theorem-2 consistency
bool crit_split_consistency(std::string& detail) {
  set_precision_bits(128);
  Rng rng(9);
  BigReal tol("1e-15"), delta = BigReal(1) / 2, eps("1e-12");
  GaloisSetQ e = GaloisSetQ::of({ProjPointQ(0, 1)});
  for (int trial = 0; trial < 20; ++trial) {
    int d1 = 2 + static_cast<int>(rng.next_int(0, 1));
    int d2 = 2 + static_cast<int>(rng.next_int(0, 1));
    RationalMapP1 f = random_poly_map(rng, d1, 4);
    RationalMapP1 g = random_poly_map(rng, d2, 4);
    PairingBoundReport rep = split_bound(f, g, e, delta, tol);
    EnergyEstimate lower = pairing_lower_arch(f, g, 6, eps, 900 + trial);
    if (rep.total_upper_bound < lower.value - lower.error) {
      detail = "pair " + std::to_string(trial) + ": upper " +
               rep.total_upper_bound.str(6) + " < lower " + lower.value.str(6);
      return false;
    }
  }
  detail = "20 pairs: split bound >= archimedean lower estimate - error";
  return true;
}

// 10. conjugation invariance of the pairing estimator
bool crit_conjugation(std::string& detail) {
  set_precision_bits(128);
  Rng rng(10);
  BigReal eps("1e-12"), worst = 0;
  int tested = 0;
  std::vector<std::pair<RationalMapP1, RationalMapP1>> pairs;
  for (int i = 0; i < 5; ++i)
    pairs.emplace_back(random_poly_map(rng, 2, 3), random_poly_map(rng, 2, 3));
  for (int m = 0; m < 10; ++m) {
    Int a = 1 + rng.next_int(0, 2), b = rng.next_int(-2, 2);
    Int c = rng.next_int(-1, 1), e = 1 + rng.next_int(0, 2);
    if (a * e - b * c == 0) {
      c = 0;
      if (a * e == 0) a = e = 1;
    }
    const auto& [f, g] = pairs[m % pairs.size()];
    Complex z0(BigReal(rng.next_range(-1.5, 1.5)),
               BigReal(rng.next_range(0.4, 1.5)));
    EnergyEstimate base =
        mutual_energy_arch_at(CplxMap::of(f), CplxMap::of(g), z0, 6, eps);
    Complex den =
        Complex(to_real(a), BigReal(0)) - Complex(to_real(c), BigReal(0)) * z0;
    Complex w0 = (Complex(to_real(e), BigReal(0)) * z0 -
                  Complex(to_real(b), BigReal(0))) / den;
    EnergyEstimate conj = mutual_energy_arch_at(
        CplxMap::of(mobius_conjugate(f, a, b, c, e)),
        CplxMap::of(mobius_conjugate(g, a, b, c, e)), w0, 6, eps);
    BigReal err = std::max(base.error, conj.error);
    BigReal gap = abs(base.value - conj.value);
    if (gap > worst) worst = gap;
    if (gap > 2 * err + BigReal("1e-6")) {
      detail = "mobius " + std::to_string(m) + ": |dU| = " + gap.str(6) +
               " > 2 err = " + (2 * err).str(6);
      return false;
    }
    ++tested;
  }
  detail = std::to_string(tested) + " conjugations, max |dU| = " +
           worst.str(4) + " within 2 x estimator error";
  return true;
}

// 11. explicit uniform-bound worked example
bool crit_uniform_bound(std::string& detail) {
  set_precision_bits(128);
  UniformBoundInputs in;
  in.c = 1;
  in.c_prime = 0;
  in.c1 = 1;
  in.c2 = 0;
  in.eps = 1;
  in.deg = 2;
  UniformBoundResult out = uniform_bound_calculator(in);
  bool ok = out.n == 19 &&
            abs(out.branch_escape - 8 * log(BigReal(8))) < 1e-25 &&
            abs(out.branch_small - 4 * log(BigReal(2))) < 1e-25;
  detail = "N = " + std::to_string(out.n) + ", branches 8 log 8 = " +
           out.branch_escape.str(6) + ", 4 log 2 = " + out.branch_small.str(6);
  return ok;
}

// 12. byte-identical CLI reruns
bool crit_determinism(std::string& detail) {
  const std::string cli = ADELIC_CLI_PATH;
  const std::string dir = "/tmp/adelic_acceptance";
  if (std::system(("mkdir -p " + dir).c_str()) != 0) {
    detail = "cannot create scratch directory";
    return false;
  }
  {
    std::FILE* f = std::fopen((dir + "/z2m2.json").c_str(), "w");
    if (!f) {
      detail = "cannot write map file";
      return false;
    }
    std::fputs(R"({"d":2,"F0":["1","0","-2"],"F1":["0","0","1"]})", f);
    std::fclose(f);
  }
  auto capture = [&](const std::string& args, std::string& out) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return false;
    char buf[4096];
    std::size_t n;
    out.clear();
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    return pclose(pipe) == 0;
  };
  const std::string map = dir + "/z2m2.json";
  const std::vector<std::string> cmds = {
      "height " + map + " 3/1",
      "holder-cert " + map,
      "--depth 5 --seed 11 pairing-energy " + map + " " + map,
      "resultant " + map,
  };
  for (const std::string& cmd : cmds) {
    std::string a, b;
    if (!capture(cmd, a) || !capture(cmd, b)) {
      detail = "subcommand failed: " + cmd;
      return false;
    }
    if (a != b || a.empty()) {
      detail = "outputs differ for: " + cmd;
      return false;
    }
  }
  detail = std::to_string(cmds.size()) + " subcommands byte-identical on rerun";
  return true;
}

const Criterion kCriteria[] = {
    {1, "product formula, 1000 rationals, 2^-240 at 256 bits", 1, crit_product_formula},
    {2, "canonical-height functional equation, 100 maps, (d+1)e-30", 30, crit_height_functional},
    {3, "monomial exactness, 100 points, 1e-30", 5, crit_monomial_exact},
    {4, "good-reduction vanishing, 20 maps x 3 primes x 50 points", 10, crit_good_reduction},
    {5, "Holder certificates, 20 maps x 10^4 pairs + falsifiability", 300, crit_holder},
    {6, "common preperiodic (z^2, z^2-2) = {inf, 0, 1, -1}", 10, crit_preper},
    {7, "set-energy inequality, 200 random configurations", 60, crit_set_energy},
    {8, "mutual-energy quadrature oracle within 5%", 120, crit_energy_oracle},
    {9, "split bound >= archimedean lower estimate, 20 pairs", 600, crit_split_consistency},
    {10, "conjugation invariance within 2 x estimator error", 300, crit_conjugation},
    {11, "uniform-bound worked example N = 19", 1, crit_uniform_bound},
    {12, "byte-identical CLI reruns", 60, crit_determinism},
};

int run_criterion(const Criterion& c) {
  auto start = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = c.body(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_budget = secs <= c.budget_seconds;
  std::printf("criterion %2d: %s  [%s]  (%.2fs / %.0fs) %s\n", c.index,
              ok && in_budget ? "PASS" : "FAIL", c.label.c_str(), secs,
              c.budget_seconds, detail.c_str());
  return ok && in_budget ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    int want = std::atoi(argv[1]);
    for (const Criterion& c : kCriteria)
      if (c.index == want) return run_criterion(c);
    std::fprintf(stderr, "no criterion %d\n", want);
    return 2;
  }
  int failures = 0;
  for (const Criterion& c : kCriteria) failures += run_criterion(c);
  return failures == 0 ? 0 : 1;
}
