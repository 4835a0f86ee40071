#include <adelic/green.hpp>

#include <catch_amalgamated.hpp>

using namespace adelic;

namespace {

HomogeneousLift lift2(std::vector<Rational> c0, std::vector<Rational> c1) {
  HomogeneousLift L;
  L.degree = static_cast<int>(c0.size()) - 1;
  L.c0 = std::move(c0);
  L.c1 = std::move(c1);
  return L;
}

RationalMapP1 map_z2() { return RationalMapP1::from_lift(lift2({1, 0, 0}, {0, 0, 1})); }
RationalMapP1 map_z2m2() { return RationalMapP1::from_lift(lift2({1, 0, -2}, {0, 0, 1})); }

RationalMapP1 random_map(Rng& rng, int d) {
  while (true) {
    std::vector<Rational> c0, c1;
    for (int i = 0; i <= d; ++i) {
      c0.emplace_back(rng.next_int(-9, 9));
      c1.emplace_back(rng.next_int(-9, 9));
    }
    HomogeneousLift L = lift2(c0, c1);
    if (L.is_zero() || resultant(L) == 0) continue;
    return RationalMapP1::from_lift(L);
  }
}

// truncated series for a scaled archimedean lift alpha * F
BigReal green_scaled_series(const RationalMapP1& f, const Rational& alpha,
                            const ProjPointQ& x, long n_steps) {
  ArchLift lift = ArchLift::of(f);
  for (auto& c : lift.c0) c = to_real(alpha) * c;
  for (auto& c : lift.c1) c = to_real(alpha) * c;
  ProjPointC pt = ProjPointC::from_q(x);
  BigReal sum = 0, w = 1;
  for (long j = 0; j < n_steps; ++j) {
    sum += w * u_arch(lift, pt);
    w /= f.degree();
    pt = apply_arch(lift, pt);
  }
  return sum;
}

}  // namespace

TEST_CASE("u_F closed forms") {
  set_precision_bits(256);
  Place arch = Place::arch();
  auto sq = map_z2();
  CHECK(u_F(sq, ProjPointQ(2, 1), arch) == 0);
  CHECK(u_F(sq, ProjPointQ(1, 0), arch) == 0);
  CHECK(u_F(sq, ProjPointQ(3, 7), arch) == 0);

  auto cheb = map_z2m2();
  BigReal half_log2 = log(BigReal(2)) / 2;
  CHECK(abs(u_F(cheb, ProjPointQ(0, 1), arch) - half_log2) < 1e-70);
  CHECK(u_F(cheb, ProjPointQ(0, 1), Place::finite(2)) == 0);
}

TEST_CASE("u_F is independent of the lift of the point") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_map(rng, 2);
    Int a = rng.next_int(-30, 30), b = rng.next_int(1, 30);
    for (Place v : {Place::arch(), Place::finite(2), Place::finite(7)}) {
      BigReal u1 = u_F(f, a, b, v);
      BigReal u2 = u_F(f, Int(7 * a), Int(7 * b), v);
      CHECK(abs(u1 - u2) < 1e-70);
    }
  }
}

TEST_CASE("arch eval constants") {
  auto c = arch_eval_constants(map_z2m2());
  CHECK(c.eval_upper == 3);
  // (X^2, Y^2): Res * X^3 = X * F0, so the adjugate rows have L1 norm 1
  CHECK(arch_eval_constants(map_z2()).adj_row_norm == 1);
}

TEST_CASE("local green params at good and bad places") {
  auto cheb = map_z2m2();  // Res = 1: good reduction everywhere
  for (long p : {2L, 3L, 5L}) {
    auto prm = local_green_params(cheb, Place::finite(p));
    CHECK(prm.res_valuation == 0);
    CHECK(prm.r == 1);
    CHECK(prm.c1 == 0);
  }
  auto f = RationalMapP1::from_lift(lift2({2, 0, 1}, {0, 0, 1}));  // Res = 4
  auto prm2 = local_green_params(f, Place::finite(2));
  CHECK(prm2.res_valuation == 2);
  CHECK(abs(prm2.c1 - log(BigReal(2))) < 1e-70);  // vres log p / d
}

TEST_CASE("green value closed forms") {
  set_precision_bits(256);
  BigReal tol("1e-30");
  auto g0 = green_value(map_z2(), ProjPointQ(2, 1), Place::arch(), tol);
  CHECK(g0.value == 0);
  CHECK(g0.exact);

  auto g5 = green_value(map_z2m2(), ProjPointQ(3, 2), Place::finite(5), tol);
  CHECK(g5.value == 0);
  CHECK(g5.exact);
  CHECK(g5.error == 0);
}

TEST_CASE("arch green of z^2-2 matches the brute-force series") {
  set_precision_bits(256);
  BigReal tol("1e-30");
  auto cheb = map_z2m2();
  auto prm = local_green_params(cheb, Place::arch());
  ProjPointQ x(0, 1);
  auto g = green_value(cheb, x, Place::arch(), tol);
  // direct deep truncation as an oracle
  BigReal oracle = green_scaled_series(cheb, 1, x, g.tail_n + 40);
  CHECK(abs(g.value - oracle) <= g.error + tol);
  CHECK(g.error <= tol);
}

TEST_CASE("good-reduction finite places vanish exactly") {
  Rng rng(41);
  BigReal tol("1e-30");
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_map(rng, 2 + static_cast<int>(rng.next_int(0, 1)));
    for (long p : {3L, 7L, 11L}) {
      if (valuation(f.res, p) != 0) continue;
      for (int i = 0; i < 10; ++i) {
        ProjPointQ x(rng.next_int(-50, 50), rng.next_int(1, 50));
        auto g = green_value_finite(f, x, p, tol);
        CHECK(g.value == 0);
        CHECK(g.exact);
      }
    }
  }
}

TEST_CASE("lift-scaling law at the archimedean place") {
  set_precision_bits(256);
  Rng rng(43);
  BigReal tol("1e-25");
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_map(rng, 2);
    Rational alpha(rng.next_int(2, 9), rng.next_int(1, 5));
    ProjPointQ x(rng.next_int(-10, 10), rng.next_int(1, 10));
    auto base = green_value(f, x, Place::arch(), tol);
    long steps = std::max(base.tail_n + 30, 140L);
    BigReal scaled = green_scaled_series(f, alpha, x, steps);
    BigReal shift = log(abs(to_real(alpha))) / (f.degree() - 1);
    BigReal reference = green_scaled_series(f, 1, x, steps);
    CHECK(abs(scaled - reference - shift) < 1e-20);
    CHECK(abs(reference - base.value) <= base.error + tol);
  }
}

TEST_CASE("functional equation g(f z) = d (g(z) - u(z))") {
  set_precision_bits(256);
  Rng rng(47);
  BigReal tol("1e-30");
  for (int trial = 0; trial < 15; ++trial) {
    auto f = random_map(rng, 2);
    ProjPointQ x(rng.next_int(-10, 10), rng.next_int(1, 10));
    for (Place v : {Place::arch(), Place::finite(2)}) {
      GreenValue gx = green_value(f, x, v, tol);
      GreenValue gfx = green_value(f, apply(f, x), v, tol);
      BigReal u = u_F(f, x, v);
      BigReal resid = gfx.value - f.degree() * (gx.value - u);
      CHECK(abs(resid) <= f.degree() * (gx.error + tol) + gfx.error + tol + BigReal("1e-65"));
    }
  }
}

TEST_CASE("holder certificates: degenerate branches") {
  auto c3 = holder_certificate(map_z2(), Place::finite(3));
  CHECK(c3.constant == 0);
  CHECK(c3.exponent == 1);
  auto c2 = holder_certificate(map_z2m2(), Place::finite(2));  // Res = 1
  CHECK(c2.constant == 0);
  CHECK(c2.exponent == 1);
  auto ca = holder_certificate(map_z2(), Place::arch());
  CHECK(ca.constant == 0);  // u_F vanishes identically for the monomial lift
  CHECK(ca.exponent == 1);
}

TEST_CASE("holder certificate shape at a bad prime and at arch") {
  auto f = RationalMapP1::from_lift(lift2({2, 0, 1}, {0, 0, 1}));  // Res = 4
  auto cert = holder_certificate(f, Place::finite(2));
  CHECK(cert.constant > 0);
  CHECK(cert.exponent > 0);
  CHECK(cert.exponent <= 1);
  // alpha = log d / (2 log(1/R)) before oscillation tightening can only shrink
  BigReal weak = log(BigReal(2)) / (2 * BigReal(2) * log(BigReal(2)));
  CHECK(cert.exponent <= weak + BigReal("1e-50"));

  auto arch = holder_certificate(map_z2m2(), Place::arch());
  CHECK(arch.constant > 0);
  CHECK(arch.exponent > 0);
  CHECK(arch.exponent <= 1);
}

TEST_CASE("holder_verify passes honest certificates and rejects corrupted ones") {
  set_precision_bits(128);
  BigReal tol("1e-8");
  auto cheb = map_z2m2();
  Place arch = Place::arch();
  auto cert = holder_certificate(cheb, arch);
  auto rep = holder_verify(cheb, arch, cert, 2000, 1, tol);
  CHECK(rep.passed);
  CHECK(rep.samples == 2000);
  CHECK(rep.max_ratio <= 1);

  auto bad = cert;
  bad.constant /= 10;
  auto rep2 = holder_verify(cheb, arch, bad, 2000, 1, tol);
  CHECK_FALSE(rep2.passed);
  CHECK_FALSE(rep2.witness.empty());
}

TEST_CASE("holder_verify at a bad prime") {
  set_precision_bits(128);
  BigReal tol("1e-12");
  auto f = RationalMapP1::from_lift(lift2({2, 0, 1}, {0, 0, 1}));
  Place v = Place::finite(2);
  auto cert = holder_certificate(f, v);
  auto rep = holder_verify(f, v, cert, 2000, 3, tol);
  CHECK(rep.passed);
}
