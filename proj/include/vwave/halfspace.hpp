#pragma once

#include <array>
#include <vector>

#include "vwave/spectral_field.hpp"

namespace vwave {

// Real values on the (z-level) x (x-grid) lattice; layout idx3 with z
// outermost.  Carrier for Psi, W, alpha components, V_omega, V.
struct HalfSpaceScalar {
  GridSpec grid;
  std::vector<double> values;

  HalfSpaceScalar() = default;
  explicit HalfSpaceScalar(const GridSpec& g) : grid(g), values(g.n3(), 0.0) {}

  double& at(int i1, int i2, int iz) { return values[grid.idx3(i1, i2, iz)]; }
  double at(int i1, int i2, int iz) const { return values[grid.idx3(i1, i2, iz)]; }
  double* level(int iz) { return values.data() + grid.idx3(0, 0, iz); }
  const double* level(int iz) const { return values.data() + grid.idx3(0, 0, iz); }

  HalfSpaceScalar& operator+=(const HalfSpaceScalar& o);
  HalfSpaceScalar& operator-=(const HalfSpaceScalar& o);
  HalfSpaceScalar& operator*=(double s);
};

HalfSpaceScalar operator+(HalfSpaceScalar a, const HalfSpaceScalar& b);
HalfSpaceScalar operator-(HalfSpaceScalar a, const HalfSpaceScalar& b);
HalfSpaceScalar operator*(double s, HalfSpaceScalar a);

struct HalfSpaceVector3 {
  std::array<HalfSpaceScalar, 3> comp;

  HalfSpaceVector3() = default;
  explicit HalfSpaceVector3(const GridSpec& g)
      : comp{HalfSpaceScalar(g), HalfSpaceScalar(g), HalfSpaceScalar(g)} {}
  HalfSpaceScalar& operator[](int i) { return comp[i]; }
  const HalfSpaceScalar& operator[](int i) const { return comp[i]; }
};

namespace halfspace {

// per-level spectral coefficients, layout idx3; internal carrier for the
// exponential-kernel machinery
struct LevelSpectra {
  GridSpec grid;
  std::vector<cplx> coeffs;
  explicit LevelSpectra(const GridSpec& g) : grid(g), coeffs(g.n3(), cplx(0.0)) {}
  cplx* level(int iz) { return coeffs.data() + grid.idx3(0, 0, iz); }
  const cplx* level(int iz) const { return coeffs.data() + grid.idx3(0, 0, iz); }
};

LevelSpectra to_spectral(const HalfSpaceScalar& f);
HalfSpaceScalar to_physical(const LevelSpectra& s);

enum class TKind { T1, T2, T3 };

// --- core operations --------------------------------------------------------

// value(z,.) = F^{-1}[ e^{z|k|} fhat(k) ], exact per mode and level
HalfSpaceScalar poisson_extend(const SpectralField2D& f);

// T1 f = int_z^0 e^{(z-s)|k|} f ds,  T2 f = int_{-Zmax}^z e^{(s-z)|k|} f ds,
// T3 f = int_{-Zmax}^0 e^{(z+s)|k|} f ds; piecewise-linear data integrated
// against the kernel in closed form per interval (plain quadrature loses all
// accuracy once |k| dz >> 1).
HalfSpaceScalar kernel_integral(TKind kind, const HalfSpaceScalar& f);
void kernel_integral_spectral(TKind kind, const LevelSpectra& f, LevelSpectra& out);
void poisson_extend_spectral(const SpectralField2D& f, LevelSpectra& out);

// 4th-order finite differences in z, one-sided at the boundaries;
// order in {1,2}; order 2 refuses Nz < 6
HalfSpaceScalar vertical_derivative(const HalfSpaceScalar& f, int order);
// derivative of the z=0 slice only (top one-sided stencil)
std::vector<double> vertical_derivative_top(const HalfSpaceScalar& f);

// z = 0 slice as a spectral field
SpectralField2D trace(const HalfSpaceScalar& f);
SpectralField2D level_field(const HalfSpaceScalar& f, int iz);

// apply a 2D multiplier on every level
HalfSpaceScalar apply_multiplier_levels(const MultiplierSymbol& m, const HalfSpaceScalar& f);

// pointwise multiply every level by a 2D physical-space factor
HalfSpaceScalar scale_levels(const HalfSpaceScalar& f, const std::vector<double>& factor2d);

// embed a 2D physical field at every level weighted by a z-profile
HalfSpaceScalar from_profile(const GridSpec& g, const std::vector<double>& plane,
                             const std::vector<double>& zprofile);

// --- norms -------------------------------------------------------------------

// L^{pz}_z L^{px}_x norm; pz, px in {6/5, 2, 3, 4, inf}; trapezoidal z-quadrature
double mixed_norm(const HalfSpaceScalar& f, double pz, double px);
double sup_norm(const HalfSpaceScalar& f);
double l2_norm(const HalfSpaceScalar& f);       // L^2_z L^2_x
double w_norm(const HalfSpaceScalar& f);        // L^2 cap L^{6/5} (max of the two)

// Y^0 and homogeneous Ydot^0 bundles of the vector-potential analysis
double y0_norm(const HalfSpaceScalar& f);
double ydot0_norm(const HalfSpaceScalar& f);
double y0_norm(const HalfSpaceVector3& v);
double ydot0_norm(const HalfSpaceVector3& v);

}  // namespace halfspace
}  // namespace vwave
