#include "mirrorstab/exp_laurent.hpp"

#include "mirrorstab/errors.hpp"

namespace mirrorstab {

namespace {
using boost::multiprecision::exp;
using boost::multiprecision::pow;

Real prune_factor() {
  static const Real f = pow(Real{2}, -64);
  return f;
}
} // namespace

ExpScalar ExpScalar::term(const Rat& rate, const Cplx& amp) {
  ExpScalar s;
  s.add_term(rate, amp);
  return s;
}

ExpScalar ExpScalar::constant(const Cplx& amp) { return term(Rat{0}, amp); }

void ExpScalar::add_term(const Rat& rate, const Cplx& amp) {
  auto [it, inserted] = terms_.emplace(rate, amp);
  if (!inserted) it->second += amp;
}

ExpScalar& ExpScalar::operator+=(const ExpScalar& o) {
  for (const auto& [r, a] : o.terms_) add_term(r, a);
  prune();
  return *this;
}

ExpScalar& ExpScalar::operator-=(const ExpScalar& o) {
  for (const auto& [r, a] : o.terms_) add_term(r, -a);
  prune();
  return *this;
}

ExpScalar ExpScalar::operator-() const {
  ExpScalar s;
  for (const auto& [r, a] : terms_) s.terms_.emplace(r, -a);
  return s;
}

ExpScalar& ExpScalar::operator*=(const ExpScalar& o) {
  ExpScalar prod;
  for (const auto& [r1, a1] : terms_) {
    for (const auto& [r2, a2] : o.terms_) {
      prod.add_term(r1 + r2, a1 * a2);
    }
  }
  prod.prune();
  *this = std::move(prod);
  return *this;
}

void ExpScalar::scale(const Cplx& c) {
  if (cabs(c) == 0) {
    terms_.clear();
    return;
  }
  for (auto& [r, a] : terms_) a *= c;
}

void ExpScalar::prune() {
  Real mx{0};
  for (const auto& [r, a] : terms_) {
    Real m = cabs(a);
    if (m > mx) mx = m;
  }
  if (mx == 0) {
    terms_.clear();
    return;
  }
  Real cut = mx * prune_factor();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (cabs(it->second) < cut) it = terms_.erase(it);
    else ++it;
  }
}

Cplx ExpScalar::evaluate(const Real& k) const {
  const Real two_pi = 2 * pi_value();
  CSum acc;
  for (const auto& [rate, amp] : terms_) {
    Real e = two_pi * k * to_real(rate);
    if (boost::multiprecision::abs(e) > Real{"1e15"})
      throw Overflow("ExpScalar::evaluate: exponent out of range");
    acc.add(exp(e) * amp);
  }
  return acc.value();
}

std::pair<Rat, Cplx> ExpScalar::leading() const {
  if (terms_.empty())
    throw LeadingCancellation("leading(): all amplitudes cancelled");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

// ---------------------------------------------------------------------------

ExpLaurentPoly ExpLaurentPoly::monomial(Mono m, ExpScalar c) {
  ExpLaurentPoly p;
  if (!c.empty()) p.terms_.emplace(m, std::move(c));
  return p;
}

bool ExpLaurentPoly::empty() const {
  for (const auto& [m, c] : terms_)
    if (!c.empty()) return false;
  return true;
}

ExpLaurentPoly& ExpLaurentPoly::operator+=(const ExpLaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.empty()) terms_.erase(it);
    }
  }
  return *this;
}

ExpLaurentPoly& ExpLaurentPoly::operator-=(const ExpLaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.empty()) terms_.erase(it);
    }
  }
  return *this;
}

ExpLaurentPoly ExpLaurentPoly::operator-() const {
  ExpLaurentPoly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

ExpLaurentPoly& ExpLaurentPoly::operator*=(const ExpLaurentPoly& o) {
  ExpLaurentPoly prod;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Mono m{m1.a + m2.a, m1.b + m2.b};
      ExpScalar c = c1 * c2;
      auto [it, inserted] = prod.terms_.emplace(m, std::move(c));
      if (!inserted) it->second += c1 * c2;
    }
  }
  for (auto it = prod.terms_.begin(); it != prod.terms_.end();) {
    if (it->second.empty()) it = prod.terms_.erase(it);
    else ++it;
  }
  *this = std::move(prod);
  return *this;
}

void ExpLaurentPoly::scale(const Cplx& c) {
  if (cabs(c) == 0) {
    terms_.clear();
    return;
  }
  for (auto& [m, coeff] : terms_) coeff.scale(c);
}

void ExpLaurentPoly::scale_rat(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  scale(Cplx{to_real(c)});
}

ExpLaurentPoly ExpLaurentPoly::moment_map(
    const std::function<Rat(long, long)>& f) const {
  ExpLaurentPoly p;
  for (const auto& [m, c] : terms_) {
    Rat w = f(m.a, m.b);
    if (w == 0) continue;
    ExpScalar scaled = c;
    scaled.scale(Cplx{to_real(w)});
    p.terms_.emplace(m, std::move(scaled));
  }
  return p;
}

Cplx ExpLaurentPoly::evaluate(const Cplx& x, const Cplx& y, const Real& k) const {
  CSum acc;
  for (const auto& [m, c] : terms_) {
    Cplx mono = pow_int(x, m.a) * pow_int(y, m.b);
    acc.add(c.evaluate(k) * mono);
  }
  return acc.value();
}

ExpScalar ExpLaurentPoly::restrict_along(const Rat& b1, const Rat& b2,
                                         const Cplx& a1, const Cplx& a2) const {
  ExpScalar out;
  for (const auto& [m, c] : terms_) {
    Cplx amp = pow_int(a1, m.a) * pow_int(a2, m.b);
    Rat shift = b1 * m.a + b2 * m.b;
    for (const auto& [rate, coeff] : c.terms()) {
      out.add_term(rate + shift, coeff * amp);
    }
  }
  out.prune();
  return out;
}

ExpLaurentPoly log_derivative(const ExpLaurentPoly& p, int axis) {
  return p.moment_map([axis](long a, long b) { return Rat{axis == 0 ? a : b}; });
}

} // namespace mirrorstab
