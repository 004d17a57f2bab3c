#include "mirrorstab/surface.hpp"

#include "mirrorstab/errors.hpp"

#include <cmath>
#include <numeric>

namespace mirrorstab {

Rat pair_classes(const NamedBasis& basis, const std::vector<Rat>& c1,
                 const std::vector<Rat>& c2) {
  const std::size_t n = basis.rank();
  if (c1.size() != n || c2.size() != n)
    throw BasisMismatch("class coefficient length does not match basis rank");
  Rat acc{0};
  for (std::size_t i = 0; i < n; ++i) {
    if (c1[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (c2[j] == 0) continue;
      acc += c1[i] * basis.form[i][j] * c2[j];
    }
  }
  return acc;
}

namespace {

long det2(const std::array<long, 2>& u, const std::array<long, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

} // namespace

ToricSurface::ToricSurface(std::vector<std::array<long, 2>> rays,
                           std::vector<std::string> names)
    : rays_(std::move(rays)), names_(std::move(names)) {
  const std::size_t n = rays_.size();
  if (n < 3) throw DegenerateFan("a complete fan needs at least 3 rays");
  if (names_.empty()) {
    for (std::size_t i = 0; i < n; ++i) names_.push_back("D" + std::to_string(i + 1));
  }
  if (names_.size() != n)
    throw DegenerateFan("ray/name count mismatch");
  for (const auto& v : rays_) {
    if (v[0] == 0 && v[1] == 0) throw NonPrimitiveRay("zero ray");
    long g = std::gcd(std::abs(v[0]), std::abs(v[1]));
    if (g != 1) throw NonPrimitiveRay("ray is not a primitive lattice vector");
  }
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = rays_[i];
    const auto& v = rays_[(i + 1) % n];
    long d = det2(u, v);
    if (d <= 0)
      throw DegenerateFan("rays are not in strict counterclockwise order");
    if (d != 1)
      throw NonSmoothFan("adjacent rays span a singular cone (det != 1)");
    // Accumulate the turning angle; with every det positive each step lies
    // in (0, pi), so a double-precision winding count is exact.
    winding += std::atan2(static_cast<double>(d),
                          static_cast<double>(u[0] * v[0] + u[1] * v[1]));
  }
  long turns = std::lround(winding / (2.0 * M_PI));
  if (turns != 1)
    throw DegenerateFan("fan does not wind around the origin exactly once");

  matrix_.assign(n, std::vector<Rat>(n, Rat{0}));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& prev = rays_[(i + n - 1) % n];
    const auto& next = rays_[(i + 1) % n];
    matrix_[i][i] = Rat{-det2(prev, next)};
    matrix_[i][(i + 1) % n] = 1;
    matrix_[i][(i + n - 1) % n] = 1;
  }
}

std::size_t ToricSurface::ray_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw BasisMismatch("unknown ray name: " + name);
}

long ToricSurface::self_intersection(std::size_t i) const {
  const std::size_t n = rays_.size();
  return -det2(rays_[(i + n - 1) % n], rays_[(i + 1) % n]);
}

std::vector<std::vector<Rat>> ToricSurface::intersection_matrix() const {
  return matrix_;
}

std::vector<Rat> ToricSurface::canonical_class() const {
  return std::vector<Rat>(rays_.size(), Rat{-1});
}

Rat ToricSurface::intersect(const std::vector<Rat>& a,
                            const std::vector<Rat>& b) const {
  const std::size_t n = rays_.size();
  if (a.size() != n || b.size() != n)
    throw BasisMismatch("divisor coefficient length does not match ray count");
  Rat acc{0};
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      acc += a[i] * matrix_[i][j] * b[j];
    }
  }
  return acc;
}

Rat ToricSurface::degree(const std::vector<Rat>& omega, std::size_t i) const {
  std::vector<Rat> di(rays_.size(), Rat{0});
  di[i] = 1;
  return intersect(omega, di);
}

bool ToricSurface::is_kahler(const std::vector<Rat>& omega) const {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (degree(omega, i) <= 0) return false;
  }
  return true;
}

Rat ToricSurface::slope_mu(const std::vector<Rat>& omega) const {
  Rat vol = intersect(omega, omega);
  if (vol == 0) throw ZeroDenominator("slope_mu: omega^2 = 0");
  std::vector<Rat> minus_k(rays_.size(), Rat{1});
  return intersect(minus_k, omega) / vol;
}

} // namespace mirrorstab
