#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vwave {

// Discretization of R^2_x x {z<0}: an N x N periodic box of side L
// (coordinates centered at the box midpoint) over Nz vertical levels on
// [-Zmax, 0], the last level exactly z = 0.  Wavenumbers are
// (2*pi/L) * {-N/2, ..., N/2-1}^2.
struct GridSpec {
  int N = 32;
  double L = 2.0 * M_PI;
  int Nz = 24;
  double Zmax = 6.0;
  double dealias_fraction = 2.0 / 3.0;

  GridSpec() = default;
  GridSpec(int N_, double L_, int Nz_, double Zmax_, double frac = 2.0 / 3.0)
      : N(N_), L(L_), Nz(Nz_), Zmax(Zmax_), dealias_fraction(frac) {
    validate();
  }

  void validate() const {
    if (N < 8 || N % 2 != 0) throw std::invalid_argument("GridSpec: N must be even and >= 8");
    if (Nz < 4) throw std::invalid_argument("GridSpec: Nz >= 4 required");
    if (L <= 0 || Zmax <= 0) throw std::invalid_argument("GridSpec: L, Zmax must be > 0");
    if (dealias_fraction <= 0 || dealias_fraction > 1)
      throw std::invalid_argument("GridSpec: dealias_fraction in (0,1]");
  }

  // signed integer mode index for axis position i in [0, N)
  int mode(int i) const { return i < N / 2 ? i : i - N; }
  double kfund() const { return 2.0 * M_PI / L; }
  double k(int i) const { return kfund() * mode(i); }
  double x(int i) const { return -0.5 * L + L * double(i) / double(N); }
  double dx() const { return L / double(N); }
  double z(int iz) const { return -Zmax + Zmax * double(iz) / double(Nz - 1); }
  double dz() const { return Zmax / double(Nz - 1); }
  std::size_t n2() const { return std::size_t(N) * N; }
  std::size_t n3() const { return std::size_t(Nz) * N * N; }

  // flat index conventions: 2D fields are [i2*N + i1] (x1 fastest),
  // half-space fields are [(iz*N + i2)*N + i1] (z outermost).
  std::size_t idx2(int i1, int i2) const { return std::size_t(i2) * N + i1; }
  std::size_t idx3(int i1, int i2, int iz) const {
    return (std::size_t(iz) * N + i2) * N + i1;
  }

  // largest retained mode index under the dealias rule; the guard keeps the
  // retained block alias-free for quadratic products (requires 3c < N).
  int dealias_cutoff() const {
    int c = int(std::floor(dealias_fraction * (N / 2)));
    if (3 * c >= N) c = (N - 1) / 3;
    return c;
  }

  bool operator==(const GridSpec& o) const {
    return N == o.N && L == o.L && Nz == o.Nz && Zmax == o.Zmax &&
           dealias_fraction == o.dealias_fraction;
  }
};

}  // namespace vwave
