#include "vwave/symbols.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "vwave/spectral_field.hpp"

namespace vwave {
namespace symbols {

cplx eval_q_first(Vec2 xi, Vec2 eta) {
  double ae = eta.norm(), ax = xi.norm();
  double dot = xi.x * eta.x + xi.y * eta.y;
  return (dot - ax * ae) / (cplx(0.0, 4.0) * std::sqrt(ae));
}

cplx eval_q_second(Vec2 xi, Vec2 eta) {
  Vec2 xm = xi - eta;
  double am = xm.norm(), ae = eta.norm(), ax = xi.norm();
  double dot = eta.x * xm.x + eta.y * xm.y;
  return -cplx(0.0, 1.0) * std::sqrt(ax) / (8.0 * std::sqrt(ae) * std::sqrt(am)) *
         (dot + ae * am);
}

cplx eval_q(Vec2 xi, Vec2 eta) {
  if (xi.norm() == 0.0 || eta.norm() == 0.0 || (xi - eta).norm() == 0.0) return cplx(0.0);
  return eval_q_first(xi, eta) + eval_q_second(xi, eta);
}

double eval_phase(int eps1, int eps2, Vec2 xi, Vec2 eta) {
  return std::sqrt(xi.norm()) - eps2 * std::sqrt((xi - eta).norm()) - eps1 * std::sqrt(eta.norm());
}

MultiplierValue eval_multiplier(int eps1, int eps2, Vec2 xi, Vec2 eta) {
  BilinearSymbol b = b_symbol(eps1, eps2);
  double phi = eval_phase(eps1, eps2, xi, eta);
  if (phi == 0.0) return {cplx(0.0), true};
  return {b(xi, eta) / (cplx(0.0, 1.0) * phi), false};
}

BilinearSymbol b_symbol(int eps1, int eps2) {
  BilinearSymbol b;
  b.homogeneity_degree = 1.5;
  if (eps1 > 0 && eps2 > 0) {
    b.label = "b++";
    b.eval = [](Vec2 xi, Vec2 eta) { return eval_q(xi, eta); };
  } else if (eps1 < 0 && eps2 < 0) {
    b.label = "b--";
    b.eval = [](Vec2 xi, Vec2 eta) { return -eval_q_first(xi, eta) + eval_q_second(xi, eta); };
  } else if (eps1 > 0 && eps2 < 0) {
    b.label = "b+-";
    b.eval = [](Vec2 xi, Vec2 eta) {
      Vec2 xm = xi - eta;
      return -eval_q(xi, eta) + eval_q_first(xi, xm) - eval_q_second(xi, xm);
    };
  } else {
    b.label = "b-+";
    b.eval = [](Vec2, Vec2) { return cplx(0.0); };
  }
  return b;
}

SpectralField2D apply_bilinear(const BilinearSymbol& b, const SpectralField2D& f,
                               const SpectralField2D& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("apply_bilinear: grid mismatch");
  const GridSpec& gr = f.grid;
  if (gr.N > 64)
    throw std::invalid_argument(
        "apply_bilinear: direct double sum is O(N^4); use N <= 64 or the dealiased product");
  const int Nh = gr.N / 2;
  SpectralField2D out(gr, false);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int m2 = -Nh; m2 < Nh; ++m2) {
    for (int m1 = -Nh; m1 < Nh; ++m1) {
      if (m1 == 0 && m2 == 0) continue;
      Vec2 xi{gr.kfund() * m1, gr.kfund() * m2};
      cplx acc(0.0);
      for (int n2 = -Nh; n2 < Nh; ++n2)
        for (int n1 = -Nh; n1 < Nh; ++n1) {
          if (n1 == 0 && n2 == 0) continue;
          int d1 = m1 - n1, d2 = m2 - n2;
          if ((d1 == 0 && d2 == 0) || d1 < -Nh || d1 >= Nh || d2 < -Nh || d2 >= Nh) continue;
          Vec2 eta{gr.kfund() * n1, gr.kfund() * n2};
          cplx bv = b(xi, eta);
          if (bv == cplx(0.0)) continue;
          acc += bv * f.mode(d1, d2) * g.mode(n1, n2);
        }
      out.mode(m1, m2) = acc;
    }
  }
  return out;
}

BilinearSymbol symbol_commutator(const BilinearSymbol& b, char field, double h_fd) {
  BilinearSymbol out;
  out.label = b.label + (field == 'S' ? "^S" : "^Omega");
  BilinearSymbol base = b;
  if (field == 'S') {
    out.eval = [base, h_fd](Vec2 xi, Vec2 eta) {
      auto d = [&](int which, int axis) {
        Vec2 xp = xi, xm = xi, ep = eta, em = eta;
        double* pp = which == 0 ? (axis == 0 ? &xp.x : &xp.y) : (axis == 0 ? &ep.x : &ep.y);
        double* pm = which == 0 ? (axis == 0 ? &xm.x : &xm.y) : (axis == 0 ? &em.x : &em.y);
        *pp += h_fd;
        *pm -= h_fd;
        return (base(which == 0 ? xp : xi, which == 0 ? eta : ep) -
                base(which == 0 ? xm : xi, which == 0 ? eta : em)) /
               (2.0 * h_fd);
      };
      return -(xi.x * d(0, 0) + xi.y * d(0, 1) + eta.x * d(1, 0) + eta.y * d(1, 1));
    };
  } else {
    out.eval = [base, h_fd](Vec2 xi, Vec2 eta) {
      auto d = [&](int which, int axis) {
        Vec2 xp = xi, xm = xi, ep = eta, em = eta;
        double* pp = which == 0 ? (axis == 0 ? &xp.x : &xp.y) : (axis == 0 ? &ep.x : &ep.y);
        double* pm = which == 0 ? (axis == 0 ? &xm.x : &xm.y) : (axis == 0 ? &em.x : &em.y);
        *pp += h_fd;
        *pm -= h_fd;
        return (base(which == 0 ? xp : xi, which == 0 ? eta : ep) -
                base(which == 0 ? xm : xi, which == 0 ? eta : em)) /
               (2.0 * h_fd);
      };
      // xi ^ grad_xi b = xi_1 d_{xi_2} b - xi_2 d_{xi_1} b, same for eta
      return (xi.x * d(0, 1) - xi.y * d(0, 0)) + (eta.x * d(1, 1) - eta.y * d(1, 0));
    };
  }
  return out;
}

double sinfty_norm_estimate(const BilinearSymbol& b, int k, int k1, int k2, int M) {
  // the localized symbol is supported where |xi| ~ 2^k, |xi-eta| ~ 2^{k1},
  // |eta| ~ 2^{k2}; sample on [-B,B)^4 with B covering the largest shell
  const double B = 1.6 * std::ldexp(1.0, std::max({k, k1, k2}) + 1);
  const double dk = 2.0 * B / M;
  const std::size_t total = std::size_t(M) * M * M * M;
  std::vector<cplx> tab(total);
  bool any = false;
  for (int a = 0; a < M; ++a)
    for (int bb = 0; bb < M; ++bb)
      for (int c = 0; c < M; ++c)
        for (int d = 0; d < M; ++d) {
          Vec2 xi{-B + dk * a, -B + dk * bb};
          Vec2 eta{-B + dk * c, -B + dk * d};
          double loc = spectral::lp_shell(xi.norm(), k) *
                       spectral::lp_shell((xi - eta).norm(), k1) *
                       spectral::lp_shell(eta.norm(), k2);
          cplx v = loc == 0.0 ? cplx(0.0) : loc * b(xi, eta);
          if (v != cplx(0.0)) any = true;
          tab[((std::size_t(a) * M + bb) * M + c) * M + d] = v;
        }
  if (!any) return 0.0;
  static std::mutex plan_mutex;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    int dims[4] = {M, M, M, M};
    fftw_plan plan =
        fftw_plan_dft(4, dims, reinterpret_cast<fftw_complex*>(tab.data()),
                      reinterpret_cast<fftw_complex*>(tab.data()), FFTW_BACKWARD,
                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  // F^{-1} over R^4 of the dk-sampled symbol: quadrature weight (dk/2pi)^4
  // per sample; L^1 sum over the dual box with cell (2pi/(M dk))^4
  double s = 0.0;
  for (const cplx& v : tab) s += std::abs(v);
  const double fourier_weight = std::pow(dk / (2.0 * M_PI), 4.0);
  const double cell = std::pow(2.0 * M_PI / (M * dk), 4.0);
  return s * fourier_weight * cell * std::pow(2.0 * M_PI, 2.0);
  // the trailing (2pi)^2 matches the 1/(2pi)-per-plane transform convention
}

}  // namespace symbols
}  // namespace vwave
