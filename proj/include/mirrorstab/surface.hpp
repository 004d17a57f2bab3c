#pragma once

#include "mirrorstab/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace mirrorstab {

/// A rank-n intersection lattice with named generators (e.g. H, E1, E2) and
/// a symmetric pairing matrix.  Divisor classes are exact rational
/// coefficient vectors over this basis.
struct NamedBasis {
  std::vector<std::string> names;
  std::vector<std::vector<Rat>> form;

  std::size_t rank() const { return names.size(); }
};

/// Exact pairing c1 . c2 in a named basis.
Rat pair_classes(const NamedBasis& basis, const std::vector<Rat>& c1,
                 const std::vector<Rat>& c2);

/// Smooth complete toric surface given by lattice rays in strict
/// counterclockwise cyclic order.  Validation enforces primitivity
/// (NonPrimitiveRay), smoothness of every cone (NonSmoothFan: adjacent
/// determinant must be exactly 1) and completeness/single winding
/// (DegenerateFan).
class ToricSurface {
 public:
  ToricSurface(std::vector<std::array<long, 2>> rays,
               std::vector<std::string> names);

  std::size_t num_rays() const { return rays_.size(); }
  const std::array<long, 2>& ray(std::size_t i) const { return rays_[i]; }
  const std::string& ray_name(std::size_t i) const { return names_[i]; }
  std::size_t ray_index(const std::string& name) const;

  /// Self-intersection D_i . D_i (the negative of the fan integer a_i in
  /// v_{i-1} + v_{i+1} = a_i v_i).
  long self_intersection(std::size_t i) const;

  /// Full matrix of D_i . D_j on the torus-invariant basis: a_i on the
  /// diagonal (negated), 1 for cyclically adjacent rays, 0 otherwise.
  std::vector<std::vector<Rat>> intersection_matrix() const;

  /// Canonical class K = -sum_i D_i as ray-basis coefficients.
  std::vector<Rat> canonical_class() const;

  /// Pairing of two ray-basis divisors through the intersection matrix.
  Rat intersect(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

  /// omega . D_i for a ray-basis divisor omega.
  Rat degree(const std::vector<Rat>& omega, std::size_t i) const;

  /// Toric Nakai criterion: omega . D_i > 0 for every invariant curve.
  bool is_kahler(const std::vector<Rat>& omega) const;

  /// Anticanonical slope  mu = (-K . omega) / omega^2.
  Rat slope_mu(const std::vector<Rat>& omega) const;

  std::size_t picard_rank() const { return rays_.size() - 2; }
  std::size_t euler_characteristic() const { return rays_.size(); }

 private:
  std::vector<std::array<long, 2>> rays_;
  std::vector<std::string> names_;
  std::vector<std::vector<Rat>> matrix_;
};

} // namespace mirrorstab
