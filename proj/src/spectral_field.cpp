#include "vwave/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vwave/fft.hpp"

namespace vwave {

SpectralField2D& SpectralField2D::operator+=(const SpectralField2D& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  is_real = is_real && o.is_real;
  return *this;
}
SpectralField2D& SpectralField2D::operator-=(const SpectralField2D& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  is_real = is_real && o.is_real;
  return *this;
}
SpectralField2D& SpectralField2D::operator*=(double s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}
SpectralField2D operator+(SpectralField2D a, const SpectralField2D& b) { return a += b; }
SpectralField2D operator-(SpectralField2D a, const SpectralField2D& b) { return a -= b; }
SpectralField2D operator*(double s, SpectralField2D a) { return a *= s; }

namespace spectral {

namespace {

// Samples live at x = -L/2 + j dx; the plain DFT assumes x = j dx.  The
// phase (-1)^{m1+m2} converts between the two so coefficients are genuine
// amplitudes of e^{ik.x} in centered coordinates.
inline double center_phase(const GridSpec& g, int i1, int i2) {
  return ((g.mode(i1) + g.mode(i2)) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

SpectralField2D forward_transform_c(const GridSpec& g, const std::vector<cplx>& samples) {
  if (samples.size() != g.n2())
    throw std::invalid_argument("forward_transform: sample count does not match GridSpec");
  SpectralField2D out(g, false);
  out.coeffs = samples;
  fft::forward2d(g.N, out.coeffs.data());
  const double inv_n2 = 1.0 / double(g.n2());
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1)
      out.coeffs[g.idx2(i1, i2)] *= inv_n2 * center_phase(g, i1, i2);
  return out;
}

std::vector<cplx> inverse_transform_c(const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  std::vector<cplx> buf(f.coeffs);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) buf[g.idx2(i1, i2)] *= center_phase(g, i1, i2);
  fft::inverse2d(g.N, buf.data());
  return buf;
}

SpectralField2D forward_transform(const GridSpec& g, const std::vector<double>& samples) {
  if (samples.size() != g.n2())
    throw std::invalid_argument("forward_transform: sample count does not match GridSpec");
  std::vector<cplx> buf(samples.begin(), samples.end());
  SpectralField2D out = forward_transform_c(g, buf);
  out.is_real = true;
  return out;
}

std::vector<double> inverse_transform(const SpectralField2D& f) {
  std::vector<cplx> buf = inverse_transform_c(f);
  std::vector<double> out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return out;
}

SpectralField2D conjugate_field(const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  SpectralField2D out(g, f.is_real);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      int j1 = (g.N - i1) % g.N, j2 = (g.N - i2) % g.N;
      out.coeffs[g.idx2(i1, i2)] = std::conj(f.coeffs[g.idx2(j1, j2)]);
    }
  return out;
}

MultiplierSymbol grad_abs(double power) {
  MultiplierSymbol m;
  m.homogeneity_degree = power;
  m.eval = [power](double k1, double k2) -> cplx {
    double a = std::hypot(k1, k2);
    if (a == 0.0) return power < 0 ? cplx(0.0) : (power == 0.0 ? cplx(1.0) : cplx(0.0));
    return cplx(std::pow(a, power), 0.0);
  };
  return m;
}

MultiplierSymbol lambda_half() { return grad_abs(0.5); }

MultiplierSymbol riesz(int axis) {
  MultiplierSymbol m;
  m.homogeneity_degree = 0.0;
  m.eval = [axis](double k1, double k2) -> cplx {
    double a = std::hypot(k1, k2);
    if (a == 0.0) return cplx(0.0);
    return cplx(0.0, (axis == 0 ? k1 : k2) / a);
  };
  return m;
}

MultiplierSymbol partial(int axis) {
  MultiplierSymbol m;
  m.homogeneity_degree = 1.0;
  m.eval = [axis](double k1, double k2) -> cplx { return cplx(0.0, axis == 0 ? k1 : k2); };
  return m;
}

double lp_cutoff(double x) {
  double a = std::abs(x);
  if (a <= 1.25) return 1.0;
  if (a >= 1.6) return 0.0;
  double t = (a - 1.25) / 0.35;
  return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
}

double lp_shell(double x, int j) {
  return lp_cutoff(std::ldexp(std::abs(x), -j)) - lp_cutoff(std::ldexp(std::abs(x), -j + 1));
}

MultiplierSymbol lp_projection(int j) {
  MultiplierSymbol m;
  m.eval = [j](double k1, double k2) -> cplx { return cplx(lp_shell(std::hypot(k1, k2), j), 0.0); };
  return m;
}

SpectralField2D apply_multiplier(const MultiplierSymbol& m, const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  SpectralField2D out(g, f.is_real);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      std::size_t id = g.idx2(i1, i2);
      out.coeffs[id] = m(g.k(i1), g.k(i2)) * f.coeffs[id];
    }
  // reality survives only for symbols with m(-k) = conj(m(k)); callers that
  // know better (e.g. i k_j) fix the flag themselves
  out.is_real = false;
  if (f.is_real) {
    bool sym = true;
    for (int t = 0; t < 8 && sym; ++t) {
      double k1 = g.k(1 + (t * 3) % (g.N / 2)), k2 = g.k((t * 5) % (g.N / 2));
      cplx a = m(k1, k2), b = m(-k1, -k2);
      if (std::abs(b - std::conj(a)) > 1e-13 * (1.0 + std::abs(a))) sym = false;
    }
    out.is_real = sym;
  }
  return out;
}

double tail_mass_fraction(const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  std::vector<cplx> phys = inverse_transform_c(f);
  double inside = 0.0, total = 0.0;
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      double v = std::norm(phys[g.idx2(i1, i2)]);
      total += v;
      if (std::abs(g.x(i1)) <= 0.25 * g.L && std::abs(g.x(i2)) <= 0.25 * g.L) inside += v;
    }
  return total == 0.0 ? 0.0 : (total - inside) / total;
}

namespace {

SpectralField2D coordinate_weighted(const SpectralField2D& f, int axis_coord,
                                    const SpectralField2D& df) {
  // physical multiplication of df by the centered coordinate along axis_coord
  const GridSpec& g = f.grid;
  std::vector<cplx> phys = inverse_transform_c(df);
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1)
      phys[g.idx2(i1, i2)] *= (axis_coord == 0 ? g.x(i1) : g.x(i2));
  SpectralField2D out = forward_transform_c(g, phys);
  out.is_real = f.is_real;
  return out;
}

}  // namespace

SpectralField2D vector_field_omega(const SpectralField2D& f) {
  SpectralField2D d1 = apply_multiplier(partial(0), f);
  SpectralField2D d2 = apply_multiplier(partial(1), f);
  d1.is_real = d2.is_real = f.is_real;
  SpectralField2D out = coordinate_weighted(f, 0, d2) - coordinate_weighted(f, 1, d1);
  out.tail_warning = tail_mass_fraction(f) > 1e-6;
  return out;
}

SpectralField2D vector_field_sigma(const SpectralField2D& f) {
  SpectralField2D d1 = apply_multiplier(partial(0), f);
  SpectralField2D d2 = apply_multiplier(partial(1), f);
  d1.is_real = d2.is_real = f.is_real;
  SpectralField2D out = coordinate_weighted(f, 0, d1) + coordinate_weighted(f, 1, d2);
  out.tail_warning = tail_mass_fraction(f) > 1e-6;
  return out;
}

SpectralField2D dealiased_product(const SpectralField2D& a, const SpectralField2D& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("dealiased_product: grid mismatch");
  const GridSpec& g = a.grid;
  const int c = g.dealias_cutoff();
  auto truncate = [&](const SpectralField2D& f) {
    SpectralField2D t = f;
    for (int i2 = 0; i2 < g.N; ++i2)
      for (int i1 = 0; i1 < g.N; ++i1)
        if (std::abs(g.mode(i1)) > c || std::abs(g.mode(i2)) > c)
          t.coeffs[g.idx2(i1, i2)] = 0.0;
    return t;
  };
  std::vector<cplx> pa = inverse_transform_c(truncate(a));
  std::vector<cplx> pb = inverse_transform_c(truncate(b));
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
  SpectralField2D out = truncate(forward_transform_c(g, pa));
  out.is_real = a.is_real && b.is_real;
  return out;
}

double l2_norm(const SpectralField2D& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs) s += std::norm(c);
  return f.grid.L * std::sqrt(s);
}

double sup_norm(const SpectralField2D& f) {
  std::vector<cplx> phys = inverse_transform_c(f);
  double m = 0.0;
  for (const auto& v : phys) m = std::max(m, std::abs(v));
  return m;
}

double lp_norm(const SpectralField2D& f, double p) {
  if (p == 2.0) return l2_norm(f);
  std::vector<cplx> phys = inverse_transform_c(f);
  if (!std::isfinite(p)) {
    double m = 0.0;
    for (const auto& v : phys) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : phys) s += std::pow(std::abs(v), p);
  const double cell = f.grid.dx() * f.grid.dx();
  return std::pow(s * cell, 1.0 / p);
}

double coeff_max(const SpectralField2D& f) {
  double m = 0.0;
  for (const auto& c : f.coeffs) m = std::max(m, std::abs(c));
  return m;
}

double reality_defect(const SpectralField2D& f) {
  const GridSpec& g = f.grid;
  double worst = 0.0, scale = coeff_max(f);
  if (scale == 0.0) return 0.0;
  for (int i2 = 0; i2 < g.N; ++i2)
    for (int i1 = 0; i1 < g.N; ++i1) {
      int j1 = (g.N - i1) % g.N, j2 = (g.N - i2) % g.N;
      worst = std::max(worst,
                       std::abs(f.coeffs[g.idx2(j1, j2)] - std::conj(f.coeffs[g.idx2(i1, i2)])));
    }
  return worst / scale;
}

}  // namespace spectral
}  // namespace vwave
