#include "mirrorstab/poly.hpp"

#include "mirrorstab/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <utility>

namespace mirrorstab {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;

/// Temporarily change the default construction precision (decimal digits).
struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned digits) : saved(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(saved); }
};

Real fresh_pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

/// Copy a value into freshly constructed storage so it picks up the current
/// default precision (used to round elevated-precision results back down).
Cplx rematerialise(const Cplx& z) {
  Cplx out{Real{0}, Real{0}};
  out.re = z.re;
  out.im = z.im;
  return out;
}

} // namespace

Cplx poly_eval(const CVec& coeffs, const Cplx& x) {
  Cplx acc{Real{0}};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

CVec poly_derivative(const CVec& coeffs) {
  CVec d;
  if (coeffs.size() <= 1) {
    d.push_back(Cplx{Real{0}});
    return d;
  }
  d.reserve(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    d.push_back(Real(static_cast<long>(i)) * coeffs[i]);
  }
  return d;
}

Cplx lu_det(CMat a) {
  const std::size_t n = a.size();
  Cplx det{Real{1}};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    Real best = cabs(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real m = cabs(a[r][col]);
      if (m > best) { best = m; piv = r; }
    }
    if (best == 0) return Cplx{Real{0}};
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Cplx f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

CVec lu_solve(CMat a, CVec b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw IllConditioned("lu_solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    Real best = cabs(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real m = cabs(a[r][col]);
      if (m > best) { best = m; piv = r; }
    }
    if (best == 0) throw IllConditioned("lu_solve: singular matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      Cplx f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  CVec x(n, Cplx{Real{0}});
  for (std::size_t ri = n; ri-- > 0;) {
    Cplx acc = b[ri];
    for (std::size_t j = ri + 1; j < n; ++j) acc -= a[ri][j] * x[j];
    x[ri] = acc / a[ri][ri];
  }
  return x;
}

CVec vandermonde_interpolate(const std::vector<Cplx>& xs,
                             const std::vector<Cplx>& vals) {
  const std::size_t n = xs.size();
  if (vals.size() != n) throw IllConditioned("interpolate: shape mismatch");
  CMat v(n, CVec(n, Cplx{Real{0}}));
  for (std::size_t j = 0; j < n; ++j) {
    Cplx p{Real{1}};
    for (std::size_t i = 0; i < n; ++i) {
      v[j][i] = p;
      p *= xs[j];
    }
  }
  return lu_solve(std::move(v), vals);
}

namespace {

/// Newton-polygon initial guesses: for each edge of the upper convex hull of
/// (i, log|c_i|), place (i2-i1) guesses on the circle whose radius balances
/// the two hull monomials.
std::vector<Cplx> initial_guesses(const CVec& c) {
  const std::size_t n = c.size() - 1; // degree
  std::vector<std::pair<std::size_t, Real>> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    Real m = cabs(c[i]);
    if (m > 0) pts.emplace_back(i, log(m));
  }
  // Upper convex hull, left to right.
  std::vector<std::pair<std::size_t, Real>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b if it lies on or below the segment a-p.
      Real lhs = (b.second - a.second) * Real(static_cast<long>(p.first - a.first));
      Real rhs = (p.second - a.second) * Real(static_cast<long>(b.first - a.first));
      if (lhs <= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  Real pi = fresh_pi();
  std::vector<Cplx> z;
  z.reserve(n);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto& a = hull[e];
    const auto& b = hull[e + 1];
    std::size_t count = b.first - a.first;
    Real r = exp((a.second - b.second) / Real(static_cast<long>(count)));
    for (std::size_t j = 0; j < count; ++j) {
      // Fixed angular offsets; the 0.41 shift avoids locking onto real-axis
      // symmetries of real-coefficient inputs.
      Real theta = 2 * pi * (Real(static_cast<long>(j)) + Real{41} / 100) /
                       Real(static_cast<long>(count)) +
                   Real(static_cast<long>(e)) * (Real{17} / 100);
      z.push_back(Cplx{r * boost::multiprecision::cos(theta),
                       r * boost::multiprecision::sin(theta)});
    }
  }
  while (z.size() < n) z.push_back(Cplx{Real{1}, Real{1} / 3});
  return z;
}

std::vector<Cplx> aberth(const CVec& c, unsigned target_bits) {
  const std::size_t n = c.size() - 1;
  CVec dc = poly_derivative(c);
  std::vector<Cplx> z = initial_guesses(c);
  Real tol = pow(Real{2}, -static_cast<long>(target_bits + 16));
  Real tiny = pow(Real{2}, -static_cast<long>(4 * target_bits));
  for (unsigned it = 0; it < 500; ++it) {
    Real max_step{0};
    for (std::size_t i = 0; i < n; ++i) {
      Cplx p = poly_eval(c, z[i]);
      if (cabs(p) == 0) continue;
      Cplx dp = poly_eval(dc, z[i]);
      if (cabs(dp) == 0) {
        // Deterministic nudge off a stationary point.
        z[i] *= Cplx{Real{1} + Real{1} / 1000, Real{1} / 1000};
        max_step = 1;
        continue;
      }
      Cplx w = p / dp;
      Cplx s{Real{0}};
      bool collision = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Cplx d = z[i] - z[j];
        if (cabs(d) <= tiny * (cabs(z[i]) + 1)) { collision = true; break; }
        s += Cplx{Real{1}} / d;
      }
      if (collision) {
        z[i] *= Cplx{Real{1} + Real{1} / 997, Real{1} / 997};
        max_step = 1;
        continue;
      }
      Cplx denom = Cplx{Real{1}} - w * s;
      Cplx step = (cabs(denom) == 0) ? w : w / denom;
      z[i] -= step;
      Real rel = cabs(step) / (cabs(z[i]) + 1);
      if (rel > max_step) max_step = rel;
    }
    if (max_step < tol) break;
  }
  // Final Newton polish (quadratic cleanup of the last bits).
  for (std::size_t i = 0; i < n; ++i) {
    for (int it = 0; it < 4; ++it) {
      Cplx p = poly_eval(c, z[i]);
      Cplx dp = poly_eval(dc, z[i]);
      if (cabs(dp) == 0) break;
      z[i] -= p / dp;
    }
  }
  return z;
}

} // namespace

std::vector<Cplx> poly_roots(const CVec& coeffs) {
  const unsigned bits = precision_bits();
  Real mag{0};
  for (const auto& ci : coeffs) {
    Real m = cabs(ci);
    if (m > mag) mag = m;
  }
  if (mag == 0) throw IllConditioned("poly_roots: zero polynomial");

  Real strip = mag * pow(Real{2}, -static_cast<long>((3 * bits) / 4));
  CVec c = coeffs;
  while (c.size() > 1 && cabs(c.back()) <= strip) c.pop_back();

  std::vector<Cplx> roots;
  while (c.size() > 1 &&
         cabs(c.front()) <= strip * pow(Real{2}, -static_cast<long>(bits / 8))) {
    roots.push_back(Cplx{Real{0}});
    c.erase(c.begin());
  }
  if (c.size() <= 1) return roots;

  // Solve at 1.5x precision, then round the results back down.
  std::vector<Cplx> hi;
  {
    PrecisionGuard guard((Real::default_precision() * 3) / 2);
    CVec ch(c.size(), Cplx{Real{0}, Real{0}});
    for (std::size_t i = 0; i < c.size(); ++i) {
      ch[i].re = c[i].re;
      ch[i].im = c[i].im;
      ch[i] /= mag;
    }
    if (ch.size() == 2) {
      hi.push_back(-(ch[0] / ch[1]));
    } else if (ch.size() == 3) {
      // Stable quadratic formula: pick the sign that avoids cancellation.
      Cplx a = ch[2], b = ch[1], cc = ch[0];
      Cplx disc = csqrt(b * b - 4 * a * cc);
      Cplx q = (b.re * disc.re + b.im * disc.im >= 0)
                   ? -(Real{1} / 2) * (b + disc)
                   : -(Real{1} / 2) * (b - disc);
      if (cabs(q) == 0) {
        hi.push_back(disc / (2 * a));
        hi.push_back(-(disc / (2 * a)));
      } else {
        hi.push_back(q / a);
        hi.push_back(cc / q);
      }
    } else {
      hi = aberth(ch, bits);
    }
  }
  for (const auto& r : hi) roots.push_back(rematerialise(r));
  return roots;
}

} // namespace mirrorstab
