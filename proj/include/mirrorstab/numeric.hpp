#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mirrorstab {

/// Exact rational scalar (GMP-backed).  All lattice data, Kähler parameters,
/// exponent rates and intersection numbers are kept exact in this type.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision binary float (MPFR-backed, runtime precision).
/// Expression templates are disabled so values behave like plain scalars.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

/// Set the working significand size.  Must be >= 128 bits; the library
/// default is 256.  Affects all Reals constructed afterwards.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// pi at the current working precision (cached per precision change).
const Real& pi_value();

Real to_real(const Rat& q);

/// Parse an exact rational from "p/q", an integer literal, or a decimal
/// literal such as "0.25" (converted exactly).  Throws ConfigError.
Rat parse_rat(const std::string& text);

/// Canonical "p/q" (or "p" for integers) form.
std::string rat_str(const Rat& q);

/// Deterministic decimal rendering with a fixed number of significant
/// digits; identical input bits yield identical strings.
std::string real_str(const Real& x, unsigned sig_digits = 15);

// ---------------------------------------------------------------------------
// Complex arithmetic over Real.  Hand-rolled: std::complex is only specified
// for builtin floating types, and MPFR's exponent range removes any need for
// scaling tricks in the elementary formulas.
// ---------------------------------------------------------------------------
struct Cplx {
  Real re{0};
  Real im{0};

  Cplx() = default;
  Cplx(Real r) : re(std::move(r)) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Cplx operator-() const { return {-re, -im}; }
  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Cplx& operator/=(const Cplx& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
  }
};

inline Cplx operator+(Cplx a, const Cplx& b) { a += b; return a; }
inline Cplx operator-(Cplx a, const Cplx& b) { a -= b; return a; }
inline Cplx operator*(Cplx a, const Cplx& b) { a *= b; return a; }
inline Cplx operator/(Cplx a, const Cplx& b) { a /= b; return a; }
inline Cplx operator*(const Real& s, Cplx a) { a.re *= s; a.im *= s; return a; }
inline bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

Real cabs(const Cplx& z);
inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
Cplx cexp(const Cplx& z);
Cplx csqrt(const Cplx& z);

/// z^n for integer n (binary exponentiation; n < 0 inverts).
Cplx pow_int(const Cplx& z, long n);

/// Compensated (Neumaier) accumulator, componentwise over re/im.  Residue
/// sums mix magnitudes across dozens of orders; straight summation at
/// working precision would forfeit the exactness checks.
class CSum {
 public:
  void add(const Cplx& z);
  Cplx value() const { return {s_re_ + c_re_, s_im_ + c_im_}; }

 private:
  Real s_re_{0}, c_re_{0}, s_im_{0}, c_im_{0};
};

} // namespace mirrorstab
