#include "mirrorstab/mirror_chart.hpp"

#include "mirrorstab/errors.hpp"

namespace mirrorstab {

std::size_t MirrorChart::theta_index(const std::string& name) const {
  for (std::size_t i = 0; i < thetas.size(); ++i)
    if (thetas[i].name == name) return i;
  throw BasisMismatch("unknown theta/divisor name: " + name);
}

ExpLaurentPoly MirrorChart::theta_poly(std::size_t i) const {
  if (i >= thetas.size()) throw BasisMismatch("theta index out of range");
  ExpLaurentPoly p;
  for (const auto& t : thetas[i].terms) {
    p += ExpLaurentPoly::monomial(Mono{t.m1, t.m2},
                                  ExpScalar::term(t.rate, Cplx{to_real(t.amp)}));
  }
  return p;
}

ExpLaurentPoly MirrorChart::potential() const {
  ExpLaurentPoly w;
  for (std::size_t i = 0; i < thetas.size(); ++i) w += theta_poly(i);
  return w;
}

ExpLaurentPoly MirrorChart::omega_theta() const {
  return class_theta(omega_theta_weights);
}

ExpLaurentPoly MirrorChart::class_theta(const std::vector<Rat>& theta_coeffs) const {
  if (theta_coeffs.size() != thetas.size())
    throw BasisMismatch("theta coefficient length does not match theta count");
  ExpLaurentPoly p;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (theta_coeffs[i] == 0) continue;
    ExpLaurentPoly ti = theta_poly(i);
    ti.scale_rat(theta_coeffs[i]);
    p += ti;
  }
  return p;
}

std::vector<Rat> MirrorChart::combination_cls(
    const std::vector<Rat>& theta_coeffs) const {
  if (theta_coeffs.size() != thetas.size())
    throw BasisMismatch("theta coefficient length does not match theta count");
  std::vector<Rat> cls(basis.rank(), Rat{0});
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < basis.rank(); ++j)
      cls[j] += theta_coeffs[i] * thetas[i].cls[j];
  }
  return cls;
}

std::vector<Rat> MirrorChart::minus_k_cls() const {
  return combination_cls(std::vector<Rat>(thetas.size(), Rat{1}));
}

Rat MirrorChart::pair(const std::vector<Rat>& c1, const std::vector<Rat>& c2) const {
  return pair_classes(basis, c1, c2);
}

MirrorChart MirrorChart::with_params(
    const std::map<std::string, Rat>& overrides) const {
  if (!rebuild || !*rebuild)
    throw ConfigError("chart '" + surface + "' has no parameter rebuild hook");
  std::map<std::string, Rat> merged = params;
  for (const auto& [k, v] : overrides) {
    if (!params.count(k))
      throw ConfigError("unknown Kähler parameter: " + k);
    merged[k] = v;
  }
  return (*rebuild)(merged);
}

MirrorChart toric_chart(const ToricSurface& fan,
                        const std::vector<Rat>& omega_ray_weights,
                        bool require_kahler) {
  const std::size_t n = fan.num_rays();
  if (omega_ray_weights.size() != n)
    throw BasisMismatch("omega weight length does not match ray count");
  if (require_kahler && !fan.is_kahler(omega_ray_weights))
    throw NotKahler("omega fails the toric Nakai criterion");

  MirrorChart chart;
  chart.surface = "toric";
  chart.basis.names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) chart.basis.names.push_back(fan.ray_name(i));
  chart.basis.form = fan.intersection_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    ThetaFunction theta;
    theta.name = fan.ray_name(i);
    ChartTerm t;
    t.m1 = fan.ray(i)[0];
    t.m2 = fan.ray(i)[1];
    t.rate = -fan.degree(omega_ray_weights, i);
    t.amp = 1;
    theta.terms.push_back(t);
    theta.cls.assign(n, Rat{0});
    theta.cls[i] = 1;
    chart.thetas.push_back(std::move(theta));
  }
  chart.omega_theta_weights = omega_ray_weights;
  chart.omega_cls = omega_ray_weights;
  chart.expected_critical_count = static_cast<int>(n);
  chart.fan = std::make_shared<ToricSurface>(fan);
  return chart;
}

} // namespace mirrorstab
