#pragma once

#include <adelic/bigreal.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace adelic {

// ascending coefficients: p(z) = c[0] + c[1] z + ... + c[n] z^n
inline Complex poly_eval(const std::vector<Complex>& c, const Complex& z) {
  Complex acc(BigReal(0), BigReal(0));
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

struct RootSet {
  std::vector<Complex> roots;
  std::vector<BigReal> residuals;  // |p(root)| after refinement
  bool converged = true;
};

// Durand-Kerner simultaneous iteration
inline RootSet complex_roots(std::vector<Complex> c) {
  while (!c.empty() && abs(c.back()) == 0) c.pop_back();
  if (c.size() < 2) throw std::invalid_argument("polynomial has no roots");
  const std::size_t n = c.size() - 1;
  Complex lead = c.back();
  for (auto& a : c) a = a / lead;

  BigReal radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, abs(c[i]));
  radius += 1;

  // deterministic non-real starting spiral
  std::vector<Complex> w(n);
  Complex seed(BigReal("0.4"), BigReal("0.9"));
  Complex cur(BigReal(1), BigReal(0));
  for (std::size_t i = 0; i < n; ++i) {
    cur = cur * seed;
    w[i] = radius * cur;
  }

  BigReal stop = pow(BigReal(2), -static_cast<int>(precision_bits()) + 16);
  bool converged = false;
  for (int iter = 0; iter < 600 && !converged; ++iter) {
    BigReal max_step = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex num = poly_eval(c, w[i]);
      Complex den(BigReal(1), BigReal(0));
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den = den * (w[i] - w[j]);
      if (abs(den) == 0) {
        // coincident iterates: nudge deterministically
        w[i] = w[i] + Complex(stop, stop);
        max_step = std::max(max_step, BigReal(1));
        continue;
      }
      Complex step = num / den;
      w[i] = w[i] - step;
      max_step = std::max(max_step, abs(step));
    }
    if (max_step < stop) converged = true;
  }

  RootSet out;
  out.roots = std::move(w);
  out.converged = converged;
  for (const Complex& r : out.roots)
    out.residuals.push_back(abs(poly_eval(c, r)) * abs(lead));
  return out;
}

}  // namespace adelic
