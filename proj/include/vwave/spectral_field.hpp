#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "vwave/grid.hpp"

namespace vwave {

using cplx = std::complex<double>;

// Complex Fourier coefficients of a field on the periodic box, indexed by the
// lattice wavenumber; coeffs[idx2(i1,i2)] is the amplitude of
// e^{i k(i1) x1} e^{i k(i2) x2} with x measured from the box midpoint.
// Carrier for h, phi, u, P_omega and friends.
struct SpectralField2D {
  GridSpec grid;
  std::vector<cplx> coeffs;
  bool is_real = true;
  bool tail_warning = false;  // set by vector-field ops on poorly localized input

  SpectralField2D() = default;
  explicit SpectralField2D(const GridSpec& g, bool real = true)
      : grid(g), coeffs(g.n2(), cplx(0.0, 0.0)), is_real(real) {}

  cplx& at(int i1, int i2) { return coeffs[grid.idx2(i1, i2)]; }
  const cplx& at(int i1, int i2) const { return coeffs[grid.idx2(i1, i2)]; }
  // accessor by signed mode pair, folding into [0,N)
  cplx& mode(int m1, int m2) {
    int N = grid.N;
    return coeffs[grid.idx2(((m1 % N) + N) % N, ((m2 % N) + N) % N)];
  }
  cplx mode(int m1, int m2) const {
    int N = grid.N;
    return coeffs[grid.idx2(((m1 % N) + N) % N, ((m2 % N) + N) % N)];
  }

  SpectralField2D& operator+=(const SpectralField2D& o);
  SpectralField2D& operator-=(const SpectralField2D& o);
  SpectralField2D& operator*=(double s);
};

SpectralField2D operator+(SpectralField2D a, const SpectralField2D& b);
SpectralField2D operator-(SpectralField2D a, const SpectralField2D& b);
SpectralField2D operator*(double s, SpectralField2D a);

// A Fourier multiplier m(k); amplitude at k = 0 is finite by convention
// (0 for singular symbols).  homogeneity_degree is metadata used by the
// property tests.
struct MultiplierSymbol {
  std::function<cplx(double k1, double k2)> eval;
  std::optional<double> homogeneity_degree;

  cplx operator()(double k1, double k2) const { return eval(k1, k2); }
};

namespace spectral {

// --- transforms -----------------------------------------------------------

// real grid samples (layout idx2) -> coefficients; rejects size mismatch
SpectralField2D forward_transform(const GridSpec& g, const std::vector<double>& samples);
std::vector<double> inverse_transform(const SpectralField2D& f);

// complex-valued fields (used for u = h + i Lambda^{1/2} phi)
SpectralField2D forward_transform_c(const GridSpec& g, const std::vector<cplx>& samples);
std::vector<cplx> inverse_transform_c(const SpectralField2D& f);

// conjugate field: coeffs of conj(f), i.e. conj(coeff(-k))
SpectralField2D conjugate_field(const SpectralField2D& f);

// --- multipliers -----------------------------------------------------------

MultiplierSymbol grad_abs(double power);   // |k|^power, 0 at k=0 when power<0 (and |k|^0 := 1)
MultiplierSymbol lambda_half();            // |k|^{1/2}
MultiplierSymbol riesz(int axis);          // i k_axis / |k|, 0 at k=0
MultiplierSymbol partial(int axis);        // i k_axis
MultiplierSymbol lp_projection(int j);     // Littlewood-Paley P_j

// dyadic cutoff: even, = 1 on [-5/4, 5/4], supported in [-8/5, 8/5]; the
// taper is the quintic smoothstep 1 - t^3(10 - 15 t + 6 t^2) on the rescaled
// transition variable, which is C^2 at both ends.
double lp_cutoff(double x);
double lp_shell(double x, int j);  // phi_j(x) = cutoff(2^-j x) - cutoff(2^-j+1 x)

SpectralField2D apply_multiplier(const MultiplierSymbol& m, const SpectralField2D& f);

// --- vector fields ---------------------------------------------------------

// Omega f = x1 d2 f - x2 d1 f, Sigma f = x . grad f; derivatives spectral,
// coordinate factors physical, coordinates centered at the box midpoint.
SpectralField2D vector_field_omega(const SpectralField2D& f);
SpectralField2D vector_field_sigma(const SpectralField2D& f);

// fraction of |f|^2 mass outside the centered half-box (localization check)
double tail_mass_fraction(const SpectralField2D& f);

// --- products ---------------------------------------------------------------

// pointwise physical product with spectral truncation at the dealias cutoff
// before and after
SpectralField2D dealiased_product(const SpectralField2D& a, const SpectralField2D& b);

// --- norms -------------------------------------------------------------------

double l2_norm(const SpectralField2D& f);            // continuum L^2(box) norm
double sup_norm(const SpectralField2D& f);           // max over grid samples
double lp_norm(const SpectralField2D& f, double p);  // L^p(box) via quadrature
double coeff_max(const SpectralField2D& f);

// largest |c(-k) - conj(c(k))| relative to the largest coefficient
double reality_defect(const SpectralField2D& f);

}  // namespace spectral
}  // namespace vwave
