#pragma once

#include <array>
#include <functional>
#include <optional>

#include "vwave/spectral_field.hpp"

namespace vwave {
namespace symbols {

struct Vec2 {
  double x = 0, y = 0;
  double norm() const { return std::hypot(x, y); }
};
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

// (xi, eta) -> complex amplitude; value is 0 whenever any of xi, eta, xi-eta
// is the zero mode
struct BilinearSymbol {
  std::function<cplx(Vec2 xi, Vec2 eta)> eval;
  std::string label;
  std::optional<double> homogeneity_degree;
  cplx operator()(Vec2 xi, Vec2 eta) const {
    if (xi.norm() == 0.0 || eta.norm() == 0.0 || (xi - eta).norm() == 0.0) return cplx(0.0);
    return eval(xi, eta);
  }
};

// q(xi,eta) = (xi.eta - |xi||eta|)/(4i|eta|^{1/2})
//           - i|xi|^{1/2} (eta.(xi-eta) + |eta||xi-eta|) / (8|eta|^{1/2}|xi-eta|^{1/2})
cplx eval_q(Vec2 xi, Vec2 eta);
cplx eval_q_first(Vec2 xi, Vec2 eta);   // the first of the two terms
cplx eval_q_second(Vec2 xi, Vec2 eta);  // the second

// Phi_{e1 e2}(xi,eta) = |xi|^{1/2} - e2 |xi-eta|^{1/2} - e1 |eta|^{1/2}
double eval_phase(int eps1, int eps2, Vec2 xi, Vec2 eta);

// m = b/(i Phi); returns 0 with resonant=true at exact resonances
struct MultiplierValue {
  cplx value;
  bool resonant = false;
};
MultiplierValue eval_multiplier(int eps1, int eps2, Vec2 xi, Vec2 eta);

// The symbols of the quadratic boundary terms B0 = sum B_{e1e2}(u_{e1}, u_{e2}).
// b_{++} = q and b_{-+} = 0 as printed; b_{--} and b_{+-} carry the
// second-term sign that makes the decomposition reproduce the direct
// assembly of B0 (pinned by the cross-check test, see the symbol unit tests):
//   b_{--}(xi,eta) = -q1(xi,eta) + q2(xi,eta)
//   b_{+-}(xi,eta) = -q(xi,eta) + q1(xi,xi-eta) - q2(xi,xi-eta)
BilinearSymbol b_symbol(int eps1, int eps2);

// B(f,g)(xi) = sum_eta b(xi,eta) fhat(xi-eta) ghat(eta); direct double sum,
// rejected for N > 64
SpectralField2D apply_bilinear(const BilinearSymbol& b, const SpectralField2D& f,
                               const SpectralField2D& g);

// commutator symbols b^S = -(xi.grad_xi + eta.grad_eta) b,
// b^Omega = (xi ^ grad_xi + eta ^ grad_eta) b, by central differences
BilinearSymbol symbol_commutator(const BilinearSymbol& b, char field, double h_fd = 1e-5);

// || F^{-1}(b phi_k(xi) phi_k1(xi-eta) phi_k2(eta)) ||_{L^1(R^4)} estimated by
// direct tabulation on an M^4 lattice; an upper-bound estimator, not a
// certified norm
double sinfty_norm_estimate(const BilinearSymbol& b, int k, int k1, int k2, int M = 24);

}  // namespace symbols
}  // namespace vwave
