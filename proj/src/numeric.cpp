#include "mirrorstab/numeric.hpp"

#include "mirrorstab/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

namespace mirrorstab {

namespace {

unsigned g_bits = 0;

unsigned bits_to_digits10(unsigned bits) {
  // floor(bits * log10(2)) + guard; MPFR precision is set in digits10 through
  // the Boost layer, so round up to avoid losing requested bits.
  return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}

void ensure_init() {
  if (g_bits == 0) {
    g_bits = 256;
    Real::default_precision(bits_to_digits10(g_bits));
  }
}

} // namespace

void set_precision_bits(unsigned bits) {
  if (bits < 128) throw ConfigError("precision must be at least 128 bits");
  g_bits = bits;
  Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() {
  ensure_init();
  return g_bits;
}

const Real& pi_value() {
  ensure_init();
  static unsigned cached_bits = 0;
  static Real cached;
  if (cached_bits != g_bits) {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    cached = p;
    cached_bits = g_bits;
  }
  return cached;
}

Real to_real(const Rat& q) {
  ensure_init();
  return static_cast<Real>(boost::multiprecision::numerator(q)) /
         static_cast<Real>(boost::multiprecision::denominator(q));
}

Rat parse_rat(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      return Rat(s); // GMP accepts "p/q" directly and canonicalises.
    }
    auto dot = s.find('.');
    auto epos = s.find_first_of("eE");
    if (dot == std::string::npos && epos == std::string::npos) {
      return Rat(s);
    }
    // Decimal literal: convert exactly.
    long exp10 = 0;
    std::string mantissa = s;
    if (epos != std::string::npos) {
      exp10 = std::stol(s.substr(epos + 1));
      mantissa = s.substr(0, epos);
      dot = mantissa.find('.');
    }
    std::string digits = mantissa;
    long frac_digits = 0;
    if (dot != std::string::npos) {
      frac_digits = static_cast<long>(mantissa.size() - dot - 1);
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
      throw ConfigError("bad rational literal: " + text);
    Rat value{Int(digits)};
    long shift = exp10 - frac_digits;
    Int ten{10};
    if (shift >= 0) {
      value *= Rat(boost::multiprecision::pow(ten, static_cast<unsigned>(shift)));
    } else {
      value /= Rat(boost::multiprecision::pow(ten, static_cast<unsigned>(-shift)));
    }
    return value;
  } catch (const std::exception&) {
    throw ConfigError("bad rational literal: " + text);
  }
}

std::string rat_str(const Rat& q) {
  return q.str();
}

std::string real_str(const Real& x, unsigned sig_digits) {
  ensure_init();
  std::string s = x.str(sig_digits);
  // Normalise negative zero so serialised reports are canonical.
  bool all_zero = true;
  for (char c : s)
    if (c >= '1' && c <= '9') { all_zero = false; break; }
  if (all_zero && !s.empty() && s[0] == '-') s = s.substr(1);
  return s;
}

Real cabs(const Cplx& z) {
  if (z.im == 0) return boost::multiprecision::abs(z.re);
  if (z.re == 0) return boost::multiprecision::abs(z.im);
  return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

Cplx cexp(const Cplx& z) {
  Real m = boost::multiprecision::exp(z.re);
  if (z.im == 0) return {m, Real{0}};
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Cplx csqrt(const Cplx& z) {
  using boost::multiprecision::sqrt;
  using boost::multiprecision::abs;
  Real r = cabs(z);
  if (r == 0) return {Real{0}, Real{0}};
  // Principal branch via half-angle formulas, stable in all quadrants.
  Real u = sqrt((r + abs(z.re)) / 2);
  Real v = (u == 0) ? Real{0} : boost::multiprecision::abs(z.im) / (2 * u);
  if (z.re >= 0) {
    return {u, z.im >= 0 ? v : -v};
  }
  return {v, z.im >= 0 ? u : -u};
}

Cplx pow_int(const Cplx& z, long n) {
  if (n == 0) return Cplx{Real{1}};
  bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(n + 1)) + 1UL
                           : static_cast<unsigned long>(n);
  Cplx base = z;
  Cplx acc{Real{1}};
  while (e) {
    if (e & 1UL) acc *= base;
    e >>= 1UL;
    if (e) base *= base;
  }
  if (invert) acc = Cplx{Real{1}} / acc;
  return acc;
}

namespace {
inline void neumaier_add(Real& s, Real& c, const Real& x) {
  using boost::multiprecision::abs;
  Real t = s + x;
  if (abs(s) >= abs(x)) {
    c += (s - t) + x;
  } else {
    c += (x - t) + s;
  }
  s = t;
}
} // namespace

void CSum::add(const Cplx& z) {
  neumaier_add(s_re_, c_re_, z.re);
  neumaier_add(s_im_, c_im_, z.im);
}

} // namespace mirrorstab
