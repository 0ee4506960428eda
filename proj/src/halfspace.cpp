#include "vwave/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vwave/fft.hpp"

namespace vwave {

HalfSpaceScalar& HalfSpaceScalar::operator+=(const HalfSpaceScalar& o) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}
HalfSpaceScalar& HalfSpaceScalar::operator-=(const HalfSpaceScalar& o) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}
HalfSpaceScalar& HalfSpaceScalar::operator*=(double s) {
  for (auto& v : values) v *= s;
  return *this;
}
HalfSpaceScalar operator+(HalfSpaceScalar a, const HalfSpaceScalar& b) { return a += b; }
HalfSpaceScalar operator-(HalfSpaceScalar a, const HalfSpaceScalar& b) { return a -= b; }
HalfSpaceScalar operator*(double s, HalfSpaceScalar a) { return a *= s; }

namespace halfspace {

namespace {

inline double center_phase(const GridSpec& g, int i1, int i2) {
  return ((g.mode(i1) + g.mode(i2)) % 2 == 0) ? 1.0 : -1.0;
}

// I0 = int_0^1 e^{-t mu} dt, I1 = int_0^1 t e^{-t mu} dt, mu >= 0
inline void interval_weights(double mu, double& I0, double& I1) {
  if (mu < 1e-5) {
    I0 = 1.0 - mu / 2 + mu * mu / 6 - mu * mu * mu / 24;
    I1 = 0.5 - mu / 3 + mu * mu / 8 - mu * mu * mu / 30;
  } else {
    double em = std::exp(-mu);
    I0 = (1.0 - em) / mu;
    I1 = (1.0 - em * (1.0 + mu)) / (mu * mu);
  }
}

}  // namespace

LevelSpectra to_spectral(const HalfSpaceScalar& f) {
  const GridSpec& g = f.grid;
  LevelSpectra out(g);
  const double inv_n2 = 1.0 / double(g.n2());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    cplx* lvl = out.level(iz);
    const double* src = f.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i) lvl[i] = src[i];
    fft::forward2d(g.N, lvl);
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) lvl[g.idx2(i1, i2)] *= inv_n2 * center_phase(g, i1, i2);
  }
  return out;
}

HalfSpaceScalar to_physical(const LevelSpectra& s) {
  const GridSpec& g = s.grid;
  HalfSpaceScalar out(g);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    std::vector<cplx> buf(s.level(iz), s.level(iz) + g.n2());
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) buf[g.idx2(i1, i2)] *= center_phase(g, i1, i2);
    fft::inverse2d(g.N, buf.data());
    double* dst = out.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i) dst[i] = buf[i].real();
  }
  return out;
}

void poisson_extend_spectral(const SpectralField2D& f, LevelSpectra& out) {
  const GridSpec& g = f.grid;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    cplx* lvl = out.level(iz);
    const double z = g.z(iz);
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) {
        double ka = std::hypot(g.k(i1), g.k(i2));
        lvl[g.idx2(i1, i2)] = std::exp(z * ka) * f.coeffs[g.idx2(i1, i2)];
      }
  }
}

HalfSpaceScalar poisson_extend(const SpectralField2D& f) {
  LevelSpectra s(f.grid);
  poisson_extend_spectral(f, s);
  return to_physical(s);
}

void kernel_integral_spectral(TKind kind, const LevelSpectra& f, LevelSpectra& out) {
  const GridSpec& g = f.grid;
  const int Nz = g.Nz;
  const double dz = g.dz();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i2 = 0; i2 < g.N; ++i2) {
    for (int i1 = 0; i1 < g.N; ++i1) {
      const std::size_t id = g.idx2(i1, i2);
      const double ka = std::hypot(g.k(i1), g.k(i2));
      const double mu = dz * ka;
      double I0, I1;
      interval_weights(mu, I0, I1);
      const double em = std::exp(-mu);
      const std::size_t stride = g.n2();
      const cplx* fc = f.coeffs.data() + id;
      cplx* oc = out.coeffs.data() + id;
      if (kind == TKind::T1) {
        // downward recurrence from z = 0 where T1 = 0
        oc[std::size_t(Nz - 1) * stride] = 0.0;
        for (int iz = Nz - 2; iz >= 0; --iz) {
          cplx seg = dz * (fc[std::size_t(iz) * stride] * (I0 - I1) +
                           fc[std::size_t(iz + 1) * stride] * I1);
          oc[std::size_t(iz) * stride] = em * oc[std::size_t(iz + 1) * stride] + seg;
        }
      } else if (kind == TKind::T2) {
        // upward recurrence from z = -Zmax (data extended by zero below)
        oc[0] = 0.0;
        for (int iz = 1; iz < Nz; ++iz) {
          cplx seg = dz * (fc[std::size_t(iz) * stride] * (I0 - I1) +
                           fc[std::size_t(iz - 1) * stride] * I1);
          oc[std::size_t(iz) * stride] = em * oc[std::size_t(iz - 1) * stride] + seg;
        }
      } else {
        // T3 f(z) = e^{z|k|} T2 f(0)
        cplx acc = 0.0;
        for (int iz = 1; iz < Nz; ++iz) {
          cplx seg = dz * (fc[std::size_t(iz) * stride] * (I0 - I1) +
                           fc[std::size_t(iz - 1) * stride] * I1);
          acc = em * acc + seg;
        }
        for (int iz = 0; iz < Nz; ++iz)
          oc[std::size_t(iz) * stride] = std::exp(g.z(iz) * ka) * acc;
      }
    }
  }
}

HalfSpaceScalar kernel_integral(TKind kind, const HalfSpaceScalar& f) {
  LevelSpectra s = to_spectral(f);
  LevelSpectra o(f.grid);
  kernel_integral_spectral(kind, s, o);
  return to_physical(o);
}

namespace {

// 4th-order first-derivative rows (interior 5-point centered, one-sided ends)
template <typename T>
void dz_fd4_column(const T* f, T* out, int Nz, double dz, std::size_t stride) {
  const double c = 1.0 / (12.0 * dz);
  auto F = [&](int iz) { return f[std::size_t(iz) * stride]; };
  out[0] = c * (-25.0 * F(0) + 48.0 * F(1) - 36.0 * F(2) + 16.0 * F(3) - 3.0 * F(4));
  out[stride] = c * (-3.0 * F(0) - 10.0 * F(1) + 18.0 * F(2) - 6.0 * F(3) + F(4));
  for (int iz = 2; iz < Nz - 2; ++iz)
    out[std::size_t(iz) * stride] = c * (F(iz - 2) - 8.0 * F(iz - 1) + 8.0 * F(iz + 1) - F(iz + 2));
  out[std::size_t(Nz - 2) * stride] =
      c * (3.0 * F(Nz - 1) + 10.0 * F(Nz - 2) - 18.0 * F(Nz - 3) + 6.0 * F(Nz - 4) - F(Nz - 5));
  out[std::size_t(Nz - 1) * stride] =
      c * (25.0 * F(Nz - 1) - 48.0 * F(Nz - 2) + 36.0 * F(Nz - 3) - 16.0 * F(Nz - 4) + 3.0 * F(Nz - 5));
}

template <typename T>
void dz2_fd4_column(const T* f, T* out, int Nz, double dz, std::size_t stride) {
  const double c = 1.0 / (dz * dz);
  auto F = [&](int iz) { return f[std::size_t(iz) * stride]; };
  out[0] = c * (15.0 / 4 * F(0) - 77.0 / 6 * F(1) + 107.0 / 6 * F(2) - 13.0 * F(3) +
                61.0 / 12 * F(4) - 5.0 / 6 * F(5));
  out[stride] = c * (5.0 / 6 * F(0) - 5.0 / 4 * F(1) - 1.0 / 3 * F(2) + 7.0 / 6 * F(3) -
                     1.0 / 2 * F(4) + 1.0 / 12 * F(5));
  for (int iz = 2; iz < Nz - 2; ++iz)
    out[std::size_t(iz) * stride] =
        c * (-1.0 / 12 * F(iz - 2) + 4.0 / 3 * F(iz - 1) - 5.0 / 2 * F(iz) + 4.0 / 3 * F(iz + 1) -
             1.0 / 12 * F(iz + 2));
  out[std::size_t(Nz - 2) * stride] =
      c * (5.0 / 6 * F(Nz - 1) - 5.0 / 4 * F(Nz - 2) - 1.0 / 3 * F(Nz - 3) + 7.0 / 6 * F(Nz - 4) -
           1.0 / 2 * F(Nz - 5) + 1.0 / 12 * F(Nz - 6));
  out[std::size_t(Nz - 1) * stride] =
      c * (15.0 / 4 * F(Nz - 1) - 77.0 / 6 * F(Nz - 2) + 107.0 / 6 * F(Nz - 3) - 13.0 * F(Nz - 4) +
           61.0 / 12 * F(Nz - 5) - 5.0 / 6 * F(Nz - 6));
}

}  // namespace

HalfSpaceScalar vertical_derivative(const HalfSpaceScalar& f, int order) {
  const GridSpec& g = f.grid;
  if (order != 1 && order != 2) throw std::invalid_argument("vertical_derivative: order in {1,2}");
  if (g.Nz < 5 || (order == 2 && g.Nz < 6))
    throw std::invalid_argument("vertical_derivative: Nz too small for requested order");
  HalfSpaceScalar out(g);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      std::size_t id = g.idx2(i1, i2);
      if (order == 1)
        dz_fd4_column(f.values.data() + id, out.values.data() + id, g.Nz, g.dz(), g.n2());
      else
        dz2_fd4_column(f.values.data() + id, out.values.data() + id, g.Nz, g.dz(), g.n2());
    }
  return out;
}

std::vector<double> vertical_derivative_top(const HalfSpaceScalar& f) {
  const GridSpec& g = f.grid;
  std::vector<double> out(g.n2());
  const double c = 1.0 / (12.0 * g.dz());
  const int top = g.Nz - 1;
  for (std::size_t i = 0; i < g.n2(); ++i) {
    auto F = [&](int iz) { return f.values[std::size_t(iz) * g.n2() + i]; };
    out[i] = c * (25.0 * F(top) - 48.0 * F(top - 1) + 36.0 * F(top - 2) - 16.0 * F(top - 3) +
                  3.0 * F(top - 4));
  }
  return out;
}

SpectralField2D level_field(const HalfSpaceScalar& f, int iz) {
  const GridSpec& g = f.grid;
  std::vector<double> slice(f.level(iz), f.level(iz) + g.n2());
  return spectral::forward_transform(g, slice);
}

SpectralField2D trace(const HalfSpaceScalar& f) { return level_field(f, f.grid.Nz - 1); }

HalfSpaceScalar apply_multiplier_levels(const MultiplierSymbol& m, const HalfSpaceScalar& f) {
  LevelSpectra s = to_spectral(f);
  const GridSpec& g = f.grid;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    cplx* lvl = s.level(iz);
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) lvl[g.idx2(i1, i2)] *= m(g.k(i1), g.k(i2));
  }
  return to_physical(s);
}

HalfSpaceScalar scale_levels(const HalfSpaceScalar& f, const std::vector<double>& factor2d) {
  const GridSpec& g = f.grid;
  HalfSpaceScalar out(g);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < g.Nz; ++iz) {
    const double* src = f.level(iz);
    double* dst = out.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i) dst[i] = src[i] * factor2d[i];
  }
  return out;
}

HalfSpaceScalar from_profile(const GridSpec& g, const std::vector<double>& plane,
                             const std::vector<double>& zprofile) {
  HalfSpaceScalar out(g);
  for (int iz = 0; iz < g.Nz; ++iz) {
    double* dst = out.level(iz);
    for (std::size_t i = 0; i < g.n2(); ++i) dst[i] = plane[i] * zprofile[iz];
  }
  return out;
}

namespace {

double xnorm_level(const GridSpec& g, const double* lvl, double px) {
  if (!std::isfinite(px)) {
    double m = 0.0;
    for (std::size_t i = 0; i < g.n2(); ++i) m = std::max(m, std::abs(lvl[i]));
    return m;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < g.n2(); ++i) s += std::pow(std::abs(lvl[i]), px);
  return std::pow(s * g.dx() * g.dx(), 1.0 / px);
}

}  // namespace

double mixed_norm(const HalfSpaceScalar& f, double pz, double px) {
  const GridSpec& g = f.grid;
  auto ok = [](double p) {
    return p == 1.2 || p == 2.0 || p == 3.0 || p == 4.0 || !std::isfinite(p);
  };
  if (!ok(pz) || !ok(px)) throw std::invalid_argument("mixed_norm: unsupported exponent");
  std::vector<double> per_level(g.Nz);
  for (int iz = 0; iz < g.Nz; ++iz) per_level[iz] = xnorm_level(g, f.level(iz), px);
  if (!std::isfinite(pz)) return *std::max_element(per_level.begin(), per_level.end());
  // trapezoidal z-quadrature
  double s = 0.0;
  for (int iz = 0; iz < g.Nz; ++iz) {
    double w = (iz == 0 || iz == g.Nz - 1) ? 0.5 : 1.0;
    s += w * std::pow(per_level[iz], pz);
  }
  return std::pow(s * g.dz(), 1.0 / pz);
}

double sup_norm(const HalfSpaceScalar& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double l2_norm(const HalfSpaceScalar& f) { return mixed_norm(f, 2.0, 2.0); }

double w_norm(const HalfSpaceScalar& f) {
  return std::max(mixed_norm(f, 2.0, 2.0), mixed_norm(f, 1.2, 1.2));
}

namespace {

// spectral x-gradient L2 norm per level and |grad|^{1/2} applications used by
// the Y-norm bundles
void level_norms(const HalfSpaceScalar& f, std::vector<double>& l2_halfgrad,
                 std::vector<double>& l2_plain, std::vector<double>& l2_grad_x) {
  const GridSpec& g = f.grid;
  LevelSpectra s = to_spectral(f);
  l2_halfgrad.assign(g.Nz, 0.0);
  l2_plain.assign(g.Nz, 0.0);
  l2_grad_x.assign(g.Nz, 0.0);
  for (int iz = 0; iz < g.Nz; ++iz) {
    const cplx* lvl = s.level(iz);
    double a = 0, b = 0, c = 0;
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) {
        double ka = std::hypot(g.k(i1), g.k(i2));
        double m = std::norm(lvl[g.idx2(i1, i2)]);
        a += ka * m;
        b += m;
        c += ka * ka * m;
      }
    l2_halfgrad[iz] = g.L * std::sqrt(a);
    l2_plain[iz] = g.L * std::sqrt(b);
    l2_grad_x[iz] = g.L * std::sqrt(c);
  }
}

double l2_in_z(const GridSpec& g, const std::vector<double>& per_level) {
  double s = 0.0;
  for (int iz = 0; iz < g.Nz; ++iz) {
    double w = (iz == 0 || iz == g.Nz - 1) ? 0.5 : 1.0;
    s += w * per_level[iz] * per_level[iz];
  }
  return std::sqrt(s * g.dz());
}

}  // namespace

double y0_norm(const HalfSpaceScalar& f) {
  const GridSpec& g = f.grid;
  std::vector<double> hg, pl, gx;
  level_norms(f, hg, pl, gx);
  HalfSpaceScalar dzf = vertical_derivative(f, 1);
  std::vector<double> hg2, dzl2, gx2;
  level_norms(dzf, hg2, dzl2, gx2);
  std::vector<double> grad(g.Nz);
  for (int iz = 0; iz < g.Nz; ++iz) grad[iz] = std::hypot(gx[iz], dzl2[iz]);
  return *std::max_element(hg.begin(), hg.end()) + *std::max_element(pl.begin(), pl.end()) +
         l2_in_z(g, grad);
}

double ydot0_norm(const HalfSpaceScalar& f) {
  const GridSpec& g = f.grid;
  // sum_{|a|<=1} ( || grad^a |grad|^{1/2} f ||_{LinfL2} + || grad^a grad f ||_{L2L2} )
  //   + || dz f ||_{LinfL2}
  HalfSpaceScalar dzf = vertical_derivative(f, 1);
  auto bundle = [&](const HalfSpaceScalar& q, bool with_dz) {
    std::vector<double> hg, pl, gx;
    level_norms(q, hg, pl, gx);
    std::vector<double> hgd, dzl2, gxd;
    HalfSpaceScalar dq = with_dz ? vertical_derivative(q, 1) : HalfSpaceScalar(q.grid);
    level_norms(dq, hgd, dzl2, gxd);
    std::vector<double> grad(g.Nz);
    for (int iz = 0; iz < g.Nz; ++iz) grad[iz] = std::hypot(gx[iz], dzl2[iz]);
    double linf_half = *std::max_element(hg.begin(), hg.end());
    double l2_grad = l2_in_z(g, grad);
    return std::make_pair(linf_half, l2_grad);
  };
  auto [h0, g0] = bundle(f, true);
  double total = h0 + g0;
  // |a| = 1 members: x-derivatives (two axes) and one z-derivative
  for (int axis = 0; axis < 2; ++axis) {
    HalfSpaceScalar df = apply_multiplier_levels(spectral::partial(axis), f);
    auto [h1, g1] = bundle(df, true);
    total += h1 + g1;
  }
  auto [hz, gz] = bundle(dzf, true);
  total += hz + gz;
  // + || dz f ||_{LinfL2}
  std::vector<double> hgz, plz, gxz;
  level_norms(dzf, hgz, plz, gxz);
  total += *std::max_element(plz.begin(), plz.end());
  return total;
}

double y0_norm(const HalfSpaceVector3& v) {
  return std::max({y0_norm(v[0]), y0_norm(v[1]), y0_norm(v[2])});
}
double ydot0_norm(const HalfSpaceVector3& v) {
  return std::max({ydot0_norm(v[0]), ydot0_norm(v[1]), ydot0_norm(v[2])});
}

}  // namespace halfspace
}  // namespace vwave
