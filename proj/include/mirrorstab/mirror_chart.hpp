#pragma once

#include "mirrorstab/exp_laurent.hpp"
#include "mirrorstab/surface.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mirrorstab {

/// One monomial of a theta function:  amp * e^{2 pi k rate} x^m1 y^m2.
struct ChartTerm {
  long m1 = 0;
  long m2 = 0;
  Rat rate{0};
  Rat amp{1};
};

/// Boundary-divisor theta function: name, defining terms and its divisor
/// class over the chart's named basis.
struct ThetaFunction {
  std::string name;
  std::vector<ChartTerm> terms;
  std::vector<Rat> cls;
};

/// A two-torus superpotential chart for a polarised surface: the potential
/// W = sum of boundary thetas, the theta-combination representing the
/// polarisation, and the exact lattice data needed for the intersection-side
/// computations.  Charts are immutable once built; changing a Kähler
/// parameter means rebuilding through `rebuild`.
struct MirrorChart {
  std::string surface;
  NamedBasis basis;
  std::vector<ThetaFunction> thetas;
  std::map<std::string, Rat> params;

  /// Per-theta weights w_i with  theta_omega = sum_i w_i theta_i.
  std::vector<Rat> omega_theta_weights;
  /// Class of the polarisation over `basis`.
  std::vector<Rat> omega_cls;

  int expected_critical_count = -1;
  /// Set when the chart has exactly one wall-scannable Kähler parameter.
  std::optional<std::string> scan_param;
  std::string completeness_note;
  /// Present for toric charts (enables the fan-side route).
  std::shared_ptr<const ToricSurface> fan;
  /// Rebuilds the chart with overridden parameters (wall scans, perturbation
  /// tests).  Null for ad-hoc charts.
  std::shared_ptr<const std::function<MirrorChart(const std::map<std::string, Rat>&)>>
      rebuild;

  std::size_t num_thetas() const { return thetas.size(); }
  std::size_t theta_index(const std::string& name) const;

  ExpLaurentPoly theta_poly(std::size_t i) const;
  /// W = sum of all boundary thetas.
  ExpLaurentPoly potential() const;
  /// Theta-combination of the polarisation (k-free weights).
  ExpLaurentPoly omega_theta() const;
  /// Arbitrary rational theta-combination sum_i c_i theta_i.
  ExpLaurentPoly class_theta(const std::vector<Rat>& theta_coeffs) const;

  /// Class of a theta-combination over `basis`.
  std::vector<Rat> combination_cls(const std::vector<Rat>& theta_coeffs) const;
  /// -K = sum of boundary classes.
  std::vector<Rat> minus_k_cls() const;
  /// Exact pairing of two classes over `basis`.
  Rat pair(const std::vector<Rat>& c1, const std::vector<Rat>& c2) const;

  MirrorChart with_params(const std::map<std::string, Rat>& overrides) const;
};

/// Chart of a smooth complete toric surface for a Kähler class given by
/// ray-basis weights: one theta per ray,
///   theta_i = e^{-2 pi k (omega . D_i)} x^{v_i},
/// with the ray basis as the named lattice.  Throws NotKahler unless
/// require_kahler is cleared.
MirrorChart toric_chart(const ToricSurface& fan,
                        const std::vector<Rat>& omega_ray_weights,
                        bool require_kahler = true);

/// The degree-4 surface chart (4 boundary thetas, 12 terms) at boundary
/// parameter delta in [0, 1/2).
MirrorChart deg4_mirror(const Rat& delta);

/// The degree-5 surface chart (5 boundary thetas) at parameters
/// a = (a1, a2, a3, a4); the default corner is (1/2, 0, 0, 0).
MirrorChart deg5_mirror(const std::array<Rat, 4>& a);

/// Built-in chart registry.
std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
MirrorChart make_builtin(const std::string& name,
                         const std::map<std::string, Rat>& overrides = {});

} // namespace mirrorstab
