#include "vwave/harmonic.hpp"

#include <cmath>
#include <numeric>

#include "halfspace_maps.hpp"

namespace vwave {
namespace dn {

using halfspace::LevelSpectra;

namespace {

struct PsiMapOut {
  HalfSpaceScalar psi;
  std::vector<cplx> dz_top_hat;
};

// One application of the harmonic-extension map.  The flattened Laplace
// equation reads (dz^2 + Delta)Psi = |grad| E^a + dz E^b with
// E^a = (grad/|grad|).(grad h dz Psi), E^b = -|grad h|^2 dz Psi + grad h . grad Psi,
// so the half-space solution formula carries sign(z-s) on E^b:
//   T Psi = e^{z|grad|} phi + 1/2 (T2 - T3)(E^b - E^a) - 1/2 T1 (E^b + E^a).
PsiMapOut apply_psi_map(const SpectralField2D& h, const SpectralField2D& phi,
                        const HalfSpaceScalar* psi, const std::vector<double>& h1,
                        const std::vector<double>& h2, const std::vector<double>& gh2) {
  const GridSpec& g = h.grid;
  LevelSpectra Gm(g), Gp(g);
  if (psi) {
    LevelSpectra f_hat = halfspace::to_spectral(*psi);
    LevelSpectra dzf_hat = halfspace::to_spectral(halfspace::vertical_derivative(*psi, 1));
    maps::EaEbResult eab = maps::assemble_ea_eb(g, h1, h2, gh2, f_hat, dzf_hat);
    for (std::size_t i = 0; i < g.n3(); ++i) {
      Gm.coeffs[i] = eab.Eb.coeffs[i] - eab.Ea.coeffs[i];
      Gp.coeffs[i] = eab.Eb.coeffs[i] + eab.Ea.coeffs[i];
    }
  }
  maps::BulkResult bulk = maps::bulk_dirichlet(g, Gm, Gp);
  PsiMapOut out{HalfSpaceScalar(g), std::vector<cplx>(g.n2())};
  for (int iz = 0; iz < g.Nz; ++iz) {
    cplx* lvl = bulk.bulk.level(iz);
    double z = g.z(iz);
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) {
        std::size_t id = g.idx2(i1, i2);
        lvl[id] += std::exp(z * std::hypot(g.k(i1), g.k(i2))) * phi.coeffs[id];
      }
  }
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      std::size_t id = g.idx2(i1, i2);
      out.dz_top_hat[id] =
          std::hypot(g.k(i1), g.k(i2)) * phi.coeffs[id] + bulk.slope_top[id];
    }
  out.psi = halfspace::to_physical(bulk.bulk);
  return out;
}

double psi_update_norm(const GridSpec& g, const HalfSpaceScalar& a, const HalfSpaceScalar& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  (void)g;
  return m;
}

}  // namespace

HarmonicExtension solve_harmonic_extension(const SpectralField2D& h, const SpectralField2D& phi,
                                           double tol, int max_iter) {
  const GridSpec& g = h.grid;
  std::vector<double> h1 = maps::dplane(h, 0);
  std::vector<double> h2 = maps::dplane(h, 1);
  std::vector<double> gh2(g.n2());
  for (std::size_t i = 0; i < g.n2(); ++i) gh2[i] = h1[i] * h1[i] + h2[i] * h2[i];

  HarmonicExtension ext;
  PsiMapOut cur = apply_psi_map(h, phi, nullptr, h1, h2, gh2);
  ext.iterations = 1;
  double prev_res = -1.0;
  std::vector<double> ratios;
  for (int m = 2; m <= max_iter; ++m) {
    PsiMapOut next = apply_psi_map(h, phi, &cur.psi, h1, h2, gh2);
    double res = psi_update_norm(g, next.psi, cur.psi);
    if (prev_res > 0.0) {
      ratios.push_back(res / prev_res);
      ext.contraction_ratio = res / prev_res;
    }
    prev_res = res;
    cur = std::move(next);
    ext.iterations = m;
    ext.residual = res;
    if (res <= tol) {
      ext.psi = std::move(cur.psi);
      SpectralField2D dz(g);
      dz.coeffs = std::move(cur.dz_top_hat);
      ext.dz_top = std::move(dz);
      return ext;
    }
    if (m >= 5 && ratios.size() >= 3) {
      double worst = std::min({ratios[ratios.size() - 1], ratios[ratios.size() - 2],
                               ratios[ratios.size() - 3]});
      if (worst >= 1.0) throw vp::NonContractive(ext.contraction_ratio);
    }
  }
  throw vp::NotConverged(ext.residual);
}

SpectralField2D dn_operator(const SpectralField2D& h, const HarmonicExtension& ext) {
  const GridSpec& g = h.grid;
  std::vector<double> h1 = maps::dplane(h, 0);
  std::vector<double> h2 = maps::dplane(h, 1);
  std::vector<double> dz0 = maps::plane_of_hat(g, ext.dz_top.coeffs);
  SpectralField2D ptrace = halfspace::trace(ext.psi);
  std::vector<double> g1 = maps::dplane(ptrace, 0);
  std::vector<double> g2 = maps::dplane(ptrace, 1);
  std::vector<double> out(g.n2());
  for (std::size_t i = 0; i < g.n2(); ++i)
    out[i] = (1.0 + h1[i] * h1[i] + h2[i] * h2[i]) * dz0[i] - (h1[i] * g1[i] + h2[i] * g2[i]);
  return spectral::forward_transform(g, out);
}

SpectralField2D dn_operator(const SpectralField2D& h, const SpectralField2D& phi, double tol,
                            int max_iter) {
  HarmonicExtension ext = solve_harmonic_extension(h, phi, tol, max_iter);
  return dn_operator(h, ext);
}

SpectralField2D dn_quadratic_term(const SpectralField2D& h, const SpectralField2D& phi) {
  const GridSpec& g = h.grid;
  using namespace spectral;
  SpectralField2D g1 = apply_multiplier(partial(0), phi);
  SpectralField2D g2 = apply_multiplier(partial(1), phi);
  g1.is_real = g2.is_real = phi.is_real;
  SpectralField2D t1 = apply_multiplier(partial(0), dealiased_product(h, g1)) +
                       apply_multiplier(partial(1), dealiased_product(h, g2));
  SpectralField2D lam_phi = apply_multiplier(grad_abs(1.0), phi);
  SpectralField2D t2 = apply_multiplier(grad_abs(1.0), dealiased_product(h, lam_phi));
  SpectralField2D out = t1 + t2;
  out *= -1.0;
  out.is_real = h.is_real && phi.is_real;
  return out;
}

OrderFit taylor_remainder_order(const SpectralField2D& h, const SpectralField2D& phi,
                                const std::vector<double>& amplitudes, double tol) {
  OrderFit fit;
  if (amplitudes.size() < 2) return fit;
  for (double a : amplitudes)
    if (a <= 0.0) throw std::invalid_argument("taylor_remainder_order: amplitudes must be > 0");
  SpectralField2D lam_phi = spectral::apply_multiplier(spectral::grad_abs(1.0), phi);
  SpectralField2D g2 = dn_quadratic_term(h, phi);
  if (spectral::l2_norm(g2) == 0.0 && spectral::l2_norm(lam_phi) == 0.0) return fit;
  std::vector<double> xs, ys;
  for (double lam : amplitudes) {
    SpectralField2D hl = lam * h;
    SpectralField2D G = dn_operator(hl, phi, tol, 80);
    SpectralField2D rem = G - lam_phi - lam * g2;
    double r = spectral::l2_norm(rem);
    if (r <= 0.0) return fit;  // degenerate (e.g. phi == 0)
    xs.push_back(std::log(lam));
    ys.push_back(std::log(r));
  }
  double n = double(xs.size());
  double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
  double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double denom = (n * sxx - sx * sx) * (n * syy - sy * sy);
  double r2 = denom <= 0 ? 0.0 : (n * sxy - sx * sy) * (n * sxy - sx * sy) / denom;
  fit.order = slope;
  fit.r2 = r2;
  fit.inconclusive = r2 < 0.9;
  return fit;
}

HalfSpaceVector3 reconstruct_velocity(const HalfSpaceScalar& psi, const SpectralField2D& h,
                                      const HalfSpaceVector3& Vomega) {
  const GridSpec& g = h.grid;
  std::vector<double> h1 = maps::dplane(h, 0);
  std::vector<double> h2 = maps::dplane(h, 1);
  HalfSpaceScalar dzp = halfspace::vertical_derivative(psi, 1);
  HalfSpaceVector3 V(g);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    SpectralField2D lvl = halfspace::level_field(psi, iz);
    std::vector<double> g1 = maps::dplane(lvl, 0);
    std::vector<double> g2 = maps::dplane(lvl, 1);
    const double* dz = dzp.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i) {
      V[0].level(iz)[i] = g1[i] - h1[i] * dz[i] + Vomega[0].level(iz)[i];
      V[1].level(iz)[i] = g2[i] - h2[i] * dz[i] + Vomega[1].level(iz)[i];
      V[2].level(iz)[i] = dz[i] + Vomega[2].level(iz)[i];
    }
  }
  return V;
}

}  // namespace dn
}  // namespace vwave
