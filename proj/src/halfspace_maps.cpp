#include "halfspace_maps.hpp"

#include <cmath>

#include "vwave/fft.hpp"

namespace vwave {
namespace maps {

namespace {
inline double center_phase(const GridSpec& g, int i1, int i2) {
  return ((g.mode(i1) + g.mode(i2)) % 2 == 0) ? 1.0 : -1.0;
}
}  // namespace

std::vector<cplx> hat_of_plane(const GridSpec& g, const std::vector<double>& p) {
  std::vector<cplx> buf(p.begin(), p.end());
  fft::forward2d(g.N, buf.data());
  const double inv = 1.0 / double(g.n2());
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) buf[g.idx2(i1, i2)] *= inv * center_phase(g, i1, i2);
  return buf;
}

std::vector<double> plane_of_hat(const GridSpec& g, const std::vector<cplx>& chat) {
  std::vector<cplx> buf(chat);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) buf[g.idx2(i1, i2)] *= center_phase(g, i1, i2);
  fft::inverse2d(g.N, buf.data());
  std::vector<double> out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return out;
}

std::vector<double> plane(const SpectralField2D& f) { return plane_of_hat(f.grid, f.coeffs); }

std::vector<double> dplane(const SpectralField2D& f, int axis) {
  const GridSpec& g = f.grid;
  std::vector<cplx> chat(f.coeffs);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1)
      chat[g.idx2(i1, i2)] *= cplx(0.0, axis == 0 ? g.k(i1) : g.k(i2));
  return plane_of_hat(g, chat);
}

void truncate_plane_spectrum(const GridSpec& g, std::vector<cplx>& chat) {
  const int c = g.dealias_cutoff();
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1)
      if (std::abs(g.mode(i1)) > c || std::abs(g.mode(i2)) > c) chat[g.idx2(i1, i2)] = 0.0;
}

void truncate_levels(LevelSpectra& s) {
  const GridSpec& g = s.grid;
  const int c = g.dealias_cutoff();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    cplx* lvl = s.level(iz);
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1)
        if (std::abs(g.mode(i1)) > c || std::abs(g.mode(i2)) > c) lvl[g.idx2(i1, i2)] = 0.0;
  }
}

std::vector<cplx> riesz_div_hat(const GridSpec& g, const std::vector<double>& v1,
                                const std::vector<double>& v2) {
  std::vector<cplx> h1 = hat_of_plane(g, v1);
  std::vector<cplx> h2 = hat_of_plane(g, v2);
  std::vector<cplx> out(g.n2());
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      double k1 = g.k(i1), k2 = g.k(i2);
      double ka = std::hypot(k1, k2);
      std::size_t id = g.idx2(i1, i2);
      out[id] = ka == 0.0 ? cplx(0.0)
                          : (cplx(0.0, k1) * h1[id] + cplx(0.0, k2) * h2[id]) / ka;
    }
  return out;
}

EaEbResult assemble_ea_eb(const GridSpec& g, const std::vector<double>& c1,
                          const std::vector<double>& c2, const std::vector<double>& cg,
                          const LevelSpectra& f_hat, const LevelSpectra& dzf_hat) {
  EaEbResult r{LevelSpectra(g), LevelSpectra(g)};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    // truncated physical copies of dz f and grad f on this level
    std::vector<cplx> dzc(dzf_hat.level(iz), dzf_hat.level(iz) + g.n2());
    truncate_plane_spectrum(g, dzc);
    std::vector<double> dzf = plane_of_hat(g, dzc);
    std::vector<cplx> g1c(f_hat.level(iz), f_hat.level(iz) + g.n2());
    std::vector<cplx> g2c(g1c);
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) {
        std::size_t id = g.idx2(i1, i2);
        g1c[id] *= cplx(0.0, g.k(i1));
        g2c[id] *= cplx(0.0, g.k(i2));
      }
    truncate_plane_spectrum(g, g1c);
    truncate_plane_spectrum(g, g2c);
    std::vector<double> g1 = plane_of_hat(g, g1c);
    std::vector<double> g2 = plane_of_hat(g, g2c);

    std::vector<double> p1(g.n2()), p2(g.n2()), eb(g.n2());
    for (std::size_t i = 0; i < g.n2(); ++i) {
      p1[i] = c1[i] * dzf[i];
      p2[i] = c2[i] * dzf[i];
      eb[i] = -cg[i] * dzf[i] + c1[i] * g1[i] + c2[i] * g2[i];
    }
    std::vector<cplx> ea_hat = riesz_div_hat(g, p1, p2);
    std::vector<cplx> eb_hat = hat_of_plane(g, eb);
    truncate_plane_spectrum(g, ea_hat);
    truncate_plane_spectrum(g, eb_hat);
    cplx* Ea = r.Ea.level(iz);
    cplx* Eb = r.Eb.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i) {
      Ea[i] = ea_hat[i];
      Eb[i] = eb_hat[i];
    }
  }
  return r;
}

namespace {

BulkResult bulk_common(const GridSpec& g, const LevelSpectra& Gm, const LevelSpectra& Gp,
                       double t3_sign) {
  LevelSpectra t1(g), t2(g), t3(g);
  halfspace::kernel_integral_spectral(TKind::T1, Gp, t1);
  halfspace::kernel_integral_spectral(TKind::T2, Gm, t2);
  halfspace::kernel_integral_spectral(TKind::T3, Gm, t3);
  BulkResult r{LevelSpectra(g), std::vector<cplx>(g.n2())};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    cplx* out = r.bulk.level(iz);
    const cplx* a = t1.level(iz);
    const cplx* b = t2.level(iz);
    const cplx* c = t3.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i)
      out[i] = 0.5 * (b[i] + t3_sign * c[i]) - 0.5 * a[i];
  }
  // exact slope of the bulk at z = 0 via the dz identities:
  //   dzT1(0) = -Gp(0), dzT2(0) = Gm(0) - |k| T2Gm(0), dzT3(0) = |k| T2Gm(0)
  const int top = g.Nz - 1;
  const cplx* gm0 = Gm.level(top);
  const cplx* gp0 = Gp.level(top);
  const cplx* t20 = t2.level(top);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      std::size_t id = g.idx2(i1, i2);
      double ka = std::hypot(g.k(i1), g.k(i2));
      r.slope_top[id] =
          0.5 * (gm0[id] - ka * t20[id] + t3_sign * ka * t20[id]) + 0.5 * gp0[id];
    }
  return r;
}

}  // namespace

BulkResult bulk_dirichlet(const GridSpec& g, const LevelSpectra& Gm, const LevelSpectra& Gp) {
  return bulk_common(g, Gm, Gp, -1.0);
}
BulkResult bulk_neumann(const GridSpec& g, const LevelSpectra& Gm, const LevelSpectra& Gp) {
  return bulk_common(g, Gm, Gp, +1.0);
}

}  // namespace maps
}  // namespace vwave
