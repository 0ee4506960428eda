#include "vwave/serial_ref.hpp"

#include <cmath>
#include <stdexcept>

namespace vwave {
namespace ref {

SpectralField2D forward_transform_direct(const GridSpec& g, const std::vector<double>& samples) {
  if (samples.size() != g.n2()) throw std::invalid_argument("size mismatch");
  SpectralField2D out(g, true);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      cplx acc(0.0);
      for (int j2 = 0; j2 < g.N; ++j2)
        for (int j1 = 0; j1 < g.N; ++j1) {
          double ph = g.k(i1) * g.x(j1) + g.k(i2) * g.x(j2);
          acc += samples[g.idx2(j1, j2)] * cplx(std::cos(ph), -std::sin(ph));
        }
      out.coeffs[g.idx2(i1, i2)] = acc / double(g.n2());
    }
  return out;
}

std::vector<double> inverse_transform_direct(const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  std::vector<double> out(g.n2(), 0.0);
  for (int j2 = 0; j2 < g.N; ++j2)
    for (int j1 = 0; j1 < g.N; ++j1) {
      cplx acc(0.0);
      for (int i2 = 0; i2 < g.N; ++i2)
        for (int i1 = 0; i1 < g.N; ++i1) {
          double ph = g.k(i1) * g.x(j1) + g.k(i2) * g.x(j2);
          acc += f.coeffs[g.idx2(i1, i2)] * cplx(std::cos(ph), std::sin(ph));
        }
      out[g.idx2(j1, j2)] = acc.real();
    }
  return out;
}

SpectralField2D apply_multiplier(const MultiplierSymbol& m, const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  SpectralField2D out = f;
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1)
      out.coeffs[g.idx2(i1, i2)] = m(g.k(i1), g.k(i2)) * f.coeffs[g.idx2(i1, i2)];
  return out;
}

HalfSpaceScalar poisson_extend(const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  HalfSpaceScalar out(g);
  for (int iz = 0; iz < g.Nz; ++iz) {
    SpectralField2D lvl = f;
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1)
        lvl.coeffs[g.idx2(i1, i2)] *= std::exp(g.z(iz) * std::hypot(g.k(i1), g.k(i2)));
    std::vector<double> phys = spectral::inverse_transform(lvl);
    for (std::size_t i = 0; i < g.n2(); ++i) out.level(iz)[i] = phys[i];
  }
  return out;
}

HalfSpaceScalar kernel_integral(halfspace::TKind kind, const HalfSpaceScalar& f) {
  const GridSpec& g = f.grid;
  halfspace::LevelSpectra s = halfspace::to_spectral(f);
  halfspace::LevelSpectra o(g);
  const double dz = g.dz();
  auto I0f = [](double mu) {
    return mu < 1e-5 ? 1.0 - mu / 2 + mu * mu / 6 : (1.0 - std::exp(-mu)) / mu;
  };
  auto I1f = [](double mu) {
    return mu < 1e-5 ? 0.5 - mu / 3 + mu * mu / 8 : (1.0 - std::exp(-mu) * (1.0 + mu)) / (mu * mu);
  };
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      double ka = std::hypot(g.k(i1), g.k(i2));
      double mu = dz * ka, em = std::exp(-mu);
      double I0 = I0f(mu), I1 = I1f(mu);
      auto F = [&](int iz) { return s.coeffs[g.idx3(i1, i2, iz)]; };
      auto& O = o.coeffs;
      if (kind == halfspace::TKind::T1) {
        O[g.idx3(i1, i2, g.Nz - 1)] = 0.0;
        for (int iz = g.Nz - 2; iz >= 0; --iz)
          O[g.idx3(i1, i2, iz)] =
              em * O[g.idx3(i1, i2, iz + 1)] + dz * (F(iz) * (I0 - I1) + F(iz + 1) * I1);
      } else if (kind == halfspace::TKind::T2) {
        O[g.idx3(i1, i2, 0)] = 0.0;
        for (int iz = 1; iz < g.Nz; ++iz)
          O[g.idx3(i1, i2, iz)] =
              em * O[g.idx3(i1, i2, iz - 1)] + dz * (F(iz) * (I0 - I1) + F(iz - 1) * I1);
      } else {
        cplx acc = 0.0;
        for (int iz = 1; iz < g.Nz; ++iz)
          acc = em * acc + dz * (F(iz) * (I0 - I1) + F(iz - 1) * I1);
        for (int iz = 0; iz < g.Nz; ++iz)
          O[g.idx3(i1, i2, iz)] = std::exp(g.z(iz) * ka) * acc;
      }
    }
  return halfspace::to_physical(o);
}

HalfSpaceScalar vertical_derivative(const HalfSpaceScalar& f, int order) {
  const GridSpec& g = f.grid;
  HalfSpaceScalar work = f;
  for (int pass = 0; pass < order; ++pass) {
    HalfSpaceScalar out(g);
    const double c = 1.0 / (12.0 * g.dz());
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1) {
        auto F = [&](int iz) { return work.values[g.idx3(i1, i2, iz)]; };
        for (int iz = 0; iz < g.Nz; ++iz) {
          double v;
          if (iz == 0)
            v = c * (-25 * F(0) + 48 * F(1) - 36 * F(2) + 16 * F(3) - 3 * F(4));
          else if (iz == 1)
            v = c * (-3 * F(0) - 10 * F(1) + 18 * F(2) - 6 * F(3) + F(4));
          else if (iz == g.Nz - 2)
            v = c * (3 * F(g.Nz - 1) + 10 * F(g.Nz - 2) - 18 * F(g.Nz - 3) + 6 * F(g.Nz - 4) -
                     F(g.Nz - 5));
          else if (iz == g.Nz - 1)
            v = c * (25 * F(g.Nz - 1) - 48 * F(g.Nz - 2) + 36 * F(g.Nz - 3) - 16 * F(g.Nz - 4) +
                     3 * F(g.Nz - 5));
          else
            v = c * (F(iz - 2) - 8 * F(iz - 1) + 8 * F(iz + 1) - F(iz + 2));
          out.values[g.idx3(i1, i2, iz)] = v;
        }
      }
    work = out;
  }
  return work;
}

SpectralField2D dealiased_product(const SpectralField2D& a, const SpectralField2D& b) {
  // direct convolution over retained modes; independent of the FFT route
  const GridSpec& g = a.grid;
  const int c = g.dealias_cutoff();
  SpectralField2D out(g, a.is_real && b.is_real);
  for (int m1 = -c; m1 <= c; ++m1)
    for (int m2 = -c; m2 <= c; ++m2) {
      cplx acc(0.0);
      for (int n1 = -c; n1 <= c; ++n1)
        for (int n2 = -c; n2 <= c; ++n2) {
          int d1 = m1 - n1, d2 = m2 - n2;
          if (std::abs(d1) > c || std::abs(d2) > c) continue;
          acc += a.mode(d1, d2) * b.mode(n1, n2);
        }
      out.mode(m1, m2) = acc;
    }
  return out;
}

}  // namespace ref
}  // namespace vwave
