#pragma once

#include "mirrorstab/numeric.hpp"

#include <compare>
#include <functional>
#include <map>
#include <utility>

namespace mirrorstab {

/// Finite sum  sum_rho a_rho * e^{2 pi k rho}  with exact rational rates rho
/// and complex amplitudes.  The scale parameter k stays symbolic; rates are
/// compared exactly, so asymptotic order is decided without floating error.
class ExpScalar {
 public:
  ExpScalar() = default;

  static ExpScalar term(const Rat& rate, const Cplx& amp);
  static ExpScalar constant(const Cplx& amp);

  const std::map<Rat, Cplx>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Rat& rate, const Cplx& amp);

  ExpScalar& operator+=(const ExpScalar& o);
  ExpScalar& operator-=(const ExpScalar& o);
  ExpScalar operator-() const;
  ExpScalar& operator*=(const ExpScalar& o);
  void scale(const Cplx& c);

  /// Drop terms whose amplitude is below 2^-64 of the largest amplitude
  /// (and exact zeros).  Keeps cancellation junk out of leading-order data.
  void prune();

  /// Numeric value at a concrete scale k.
  Cplx evaluate(const Real& k) const;

  /// Highest-rate term (rate, amplitude).  Throws LeadingCancellation when
  /// no terms survive pruning.
  std::pair<Rat, Cplx> leading() const;

 private:
  std::map<Rat, Cplx> terms_;
};

inline ExpScalar operator+(ExpScalar a, const ExpScalar& b) { a += b; return a; }
inline ExpScalar operator-(ExpScalar a, const ExpScalar& b) { a -= b; return a; }
inline ExpScalar operator*(ExpScalar a, const ExpScalar& b) { a *= b; return a; }

/// Monomial exponents of a Laurent term x^a y^b.
struct Mono {
  long a = 0;
  long b = 0;
  auto operator<=>(const Mono&) const = default;
};

/// Laurent polynomial in two torus variables with ExpScalar coefficients:
/// the common shape of superpotentials, theta combinations and their
/// moment/Hessian derivatives.
class ExpLaurentPoly {
 public:
  ExpLaurentPoly() = default;

  static ExpLaurentPoly monomial(Mono m, ExpScalar c);

  const std::map<Mono, ExpScalar>& terms() const { return terms_; }
  bool empty() const;

  ExpLaurentPoly& operator+=(const ExpLaurentPoly& o);
  ExpLaurentPoly& operator-=(const ExpLaurentPoly& o);
  ExpLaurentPoly operator-() const;
  ExpLaurentPoly& operator*=(const ExpLaurentPoly& o);
  void scale(const Cplx& c);
  void scale_rat(const Rat& c);

  /// Termwise coefficient reweighting by an exact function of the exponents:
  /// x^a y^b c  ->  x^a y^b (f(a,b) c).  This is how logarithmic derivatives
  /// and second-moment (Hessian) combinations are formed.
  ExpLaurentPoly moment_map(const std::function<Rat(long, long)>& f) const;

  /// Numeric value at x, y, scale k.  Compensated summation.
  Cplx evaluate(const Cplx& x, const Cplx& y, const Real& k) const;

  /// Substitute the one-parameter family x = a1 e^{2 pi k b1},
  /// y = a2 e^{2 pi k b2}; exact rate bookkeeping, then pruned.
  /// This is a ring homomorphism into ExpScalar.
  ExpScalar restrict_along(const Rat& b1, const Rat& b2,
                           const Cplx& a1, const Cplx& a2) const;

 private:
  std::map<Mono, ExpScalar> terms_;
};

inline ExpLaurentPoly operator+(ExpLaurentPoly a, const ExpLaurentPoly& b) { a += b; return a; }
inline ExpLaurentPoly operator-(ExpLaurentPoly a, const ExpLaurentPoly& b) { a -= b; return a; }
inline ExpLaurentPoly operator*(ExpLaurentPoly a, const ExpLaurentPoly& b) { a *= b; return a; }

/// x d/dx (axis 0) or y d/dy (axis 1) as a termwise moment map.
ExpLaurentPoly log_derivative(const ExpLaurentPoly& p, int axis);

} // namespace mirrorstab
