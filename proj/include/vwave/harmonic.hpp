#pragma once

#include <vector>

#include "vwave/elliptic.hpp"
#include "vwave/halfspace.hpp"
#include "vwave/spectral_field.hpp"

namespace vwave {
namespace dn {

// Converged harmonic extension in the flattened domain plus the data needed
// to evaluate the Dirichlet-Neumann operator without stencil error: the top
// slope is the exact z-derivative at z = 0 of the kernel representation.
struct HarmonicExtension {
  HalfSpaceScalar psi;
  SpectralField2D dz_top;
  double residual = 0.0;
  int iterations = 0;
  double contraction_ratio = 0.0;
};

HarmonicExtension solve_harmonic_extension(const SpectralField2D& h, const SpectralField2D& phi,
                                           double tol, int max_iter);

// G(h)phi = (1+|grad h|^2) dz Psi|_0 - grad h . grad_x Psi|_0
SpectralField2D dn_operator(const SpectralField2D& h, const HarmonicExtension& ext);
SpectralField2D dn_operator(const SpectralField2D& h, const SpectralField2D& phi, double tol,
                            int max_iter);

// quadratic Taylor term G2(h)phi = -div(h grad phi) - |grad|(h |grad| phi)
SpectralField2D dn_quadratic_term(const SpectralField2D& h, const SpectralField2D& phi);

// fit || G(lam h)phi - |grad|phi - lam G2(h)phi || ~ lam^p over a geometric
// amplitude ladder; returns the fitted order with an inconclusive flag when
// the log-log fit is poor or the data degenerate
struct OrderFit {
  double order = 0.0;
  double r2 = 0.0;
  bool inconclusive = true;
};
OrderFit taylor_remainder_order(const SpectralField2D& h, const SpectralField2D& phi,
                                const std::vector<double>& amplitudes, double tol = 1e-12);

// V^i = d^i Psi - d^i h dz Psi + V_omega^i (with d^3 h = 0)
HalfSpaceVector3 reconstruct_velocity(const HalfSpaceScalar& psi, const SpectralField2D& h,
                                      const HalfSpaceVector3& Vomega);

}  // namespace dn
}  // namespace vwave
