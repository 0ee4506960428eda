#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwave/halfspace.hpp"
#include "vwave/spectral_field.hpp"

namespace vwave {
namespace vp {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonContractive : SolverError {
  double ratio;
  explicit NonContractive(double r)
      : SolverError("fixed-point map is not a contraction, ratio " + std::to_string(r)),
        ratio(r) {}
};
struct NotConverged : SolverError {
  double residual;
  explicit NotConverged(double r)
      : SolverError("fixed-point iteration did not converge, residual " + std::to_string(r)),
        residual(r) {}
};

// Solution of the flattened mixed Dirichlet/Neumann system for the vector
// potential.  dz_top carries the exact z-derivative of each component at
// z = 0 taken on the kernel representation (the trace quantities B_omega,
// P_omega and the boundary diagnostics are built from it, so they do not
// inherit one-sided-stencil error).
struct VectorPotentialSolution {
  HalfSpaceVector3 alpha;
  std::array<SpectralField2D, 3> dz_top;
  double residual = 0.0;           // Ydot0 norm of the last update, sup over components
  int iterations = 0;
  double contraction_ratio = 0.0;  // last-step ratio
  std::vector<double> ratio_history;
  double pde_residual = 0.0;       // L2_{x,z} residual of (eqflat0) on the defect
  double bc_residual = 0.0;        // boundary-condition traces on the defect
  double div_compat = 0.0;         // L2 of the flattened divergence at z = 0
};

// coefficient planes derived from h (or their exact time derivatives)
struct EllipticCoeffs {
  GridSpec grid;
  std::vector<double> h1, h2, gh2;              // grad h and |grad h|^2
  std::vector<double> kh1, kh2;                 // (1+|gh|^2)^{-1} grad h
  std::vector<double> kh11, kh12, kh22;         // (1+|gh|^2)^{-1} h_i h_j
  static EllipticCoeffs from_h(const SpectralField2D& h);
  static EllipticCoeffs dotted(const SpectralField2D& h, const SpectralField2D& dth);
};

// E^a(alpha) = (grad/|grad|).(grad h dz alpha), E^b = -|grad h|^2 dz alpha + grad h . grad alpha
std::pair<HalfSpaceVector3, HalfSpaceVector3> assemble_bulk_terms(const HalfSpaceVector3& alpha,
                                                                  const SpectralField2D& h);

// (B1, B2, B3a, B3b) from the z = 0 traces
struct BoundaryTerms {
  SpectralField2D B1, B2, B3a, B3b;
};
BoundaryTerms assemble_boundary_terms(const HalfSpaceVector3& alpha, const SpectralField2D& h);

// one application of the map L (the fixed-point form of the elliptic system);
// W is the forcing (F = W), zero-meaned per level internally
HalfSpaceVector3 fixed_point_step(const HalfSpaceVector3& alpha, const SpectralField2D& h,
                                  const HalfSpaceVector3& W);

VectorPotentialSolution solve_vector_potential(const SpectralField2D& h,
                                               const HalfSpaceVector3& W, double tol,
                                               int max_iter);

// Picard solve of  dt_alpha = L(dt_alpha) + Ldot(alpha)  with forcing dtW;
// the dotted map has the coefficient planes replaced by their exact time
// derivatives and zero forcing of its own.
VectorPotentialSolution solve_vector_potential_dt(const VectorPotentialSolution& alpha,
                                                  const SpectralField2D& h,
                                                  const SpectralField2D& dth,
                                                  const HalfSpaceVector3& W,
                                                  const HalfSpaceVector3& dtW, double tol,
                                                  int max_iter = 50);

// V_omega = -[curl alpha + dz alpha_3 grad-perp h - (dz alpha . grad-perp h) e3];
// the overall sign makes curl V_omega = +W (v_omega = -curl beta upstream).
HalfSpaceVector3 reconstruct_Vomega(const VectorPotentialSolution& sol, const SpectralField2D& h);

// horizontal trace (P_omega) and vertical trace (B_omega) at z = 0, using the
// exact top slopes
struct BoundaryRestriction {
  SpectralField2D P1, P2, Bomega;
};
BoundaryRestriction restrict_Pomega(const VectorPotentialSolution& sol, const SpectralField2D& h);

// time derivative of V_omega per the differentiated reconstruction identity
HalfSpaceVector3 reconstruct_dtVomega(const VectorPotentialSolution& sol,
                                      const VectorPotentialSolution& dtsol,
                                      const SpectralField2D& h, const SpectralField2D& dth);
BoundaryRestriction restrict_dtPomega(const VectorPotentialSolution& sol,
                                      const VectorPotentialSolution& dtsol,
                                      const SpectralField2D& h, const SpectralField2D& dth);

}  // namespace vp
}  // namespace vwave
