#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vwave/harmonic.hpp"

namespace vwave {
namespace boundary {

struct BlowupDetected : vp::SolverError {
  BlowupDetected() : vp::SolverError("non-finite value in boundary step") {}
};
struct TaylorSignLost : vp::SolverError {
  double value;
  explicit TaylorSignLost(double v)
      : vp::SolverError("Taylor coefficient dropped to " + std::to_string(v)), value(v) {}
};

// rotational forcing seen by the boundary equations: P_omega and dt P_omega
struct RotationalForcing {
  SpectralField2D P1, P2, dtP1, dtP2;
  static RotationalForcing zero(const GridSpec& g) {
    return RotationalForcing{SpectralField2D(g), SpectralField2D(g), SpectralField2D(g),
                             SpectralField2D(g)};
  }
};

// (h, phi) with phi mean-zero; cached DN data refreshed by ensure_cache
struct BoundaryState {
  GridSpec grid;
  SpectralField2D h, phi;
  double t = 0.0;
  // caches
  std::optional<dn::HarmonicExtension> ext;
  SpectralField2D Gh;  // G(h) phi

  BoundaryState() = default;
  explicit BoundaryState(const GridSpec& g)
      : grid(g), h(g), phi(g), Gh(g) {}

  SpectralField2D u() const;   // h + i Lambda^{1/2} phi
  void set_from_u(const SpectralField2D& u);  // h = (u+conj u)/2 etc., exact reality
  void ensure_cache(double tol, int max_iter);
};

// full right-hand side of the boundary system; Gh must be the DN value for
// (h, phi); the Bernoulli constant (zero mode of dt phi) is projected out
struct BoundaryRhs {
  SpectralField2D dth, dtphi;
};
BoundaryRhs rhs_boundary(const SpectralField2D& h, const SpectralField2D& phi,
                         const SpectralField2D& Gh, const RotationalForcing& f);

// the three-way split dt u + i Lambda^{1/2} u = B0 + N2 + N3; N3 is the exact
// remainder (full RHS minus B0 minus N2)
struct RhsDecomposition {
  SpectralField2D B0, N2, N3;
};
RhsDecomposition assemble_u_rhs_decomposition(const SpectralField2D& h,
                                              const SpectralField2D& phi,
                                              const SpectralField2D& Gh,
                                              const RotationalForcing& f);

// forcing provider called at stage times with the stage state
using ForcingProvider =
    std::function<RotationalForcing(double t, const SpectralField2D& h, const SpectralField2D& phi)>;

struct StepOptions {
  double elliptic_tol = 1e-12;
  int elliptic_max_iter = 60;
  bool per_stage_forcing = false;  // default: forcing frozen at its step-start value
};

// one integrating-factor RK4 step on u; the linear semigroup e^{-i dt Lambda^{1/2}}
// is applied exactly per mode
BoundaryState step(const BoundaryState& state, const ForcingProvider& forcing, double dt,
                   const StepOptions& opts);

// H = 1/2 int ( phi G(h)phi + h^2 ) dx
double hamiltonian(const BoundaryState& state);

}  // namespace boundary
}  // namespace vwave
