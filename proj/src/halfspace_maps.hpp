#pragma once

// Internal machinery shared by the vector-potential and harmonic-extension
// fixed-point maps: E^a / E^b assembly on z-levels and the exponential-kernel
// bulk solves with their exact top slopes.  Not installed.

#include <vector>

#include "vwave/halfspace.hpp"
#include "vwave/spectral_field.hpp"

namespace vwave {
namespace maps {

using halfspace::LevelSpectra;
using halfspace::TKind;

// physical samples of a spectral field
std::vector<double> plane(const SpectralField2D& f);
// spectral x-derivative as a physical plane
std::vector<double> dplane(const SpectralField2D& f, int axis);

// dealias-truncate per-level spectra in place
void truncate_levels(LevelSpectra& s);
void truncate_plane_spectrum(const GridSpec& g, std::vector<cplx>& chat);

// E^a = (grad/|grad|) . (c grad-h-like  dz f) and
// E^b = -c_g dz f + c1 d1 f + c2 d2 f  assembled per level from physical
// coefficient planes; inputs dzf/f are the level spectra of the field, all
// products dealias-truncated.
struct EaEbResult {
  LevelSpectra Ea;  // spectral
  LevelSpectra Eb;  // spectral
};
EaEbResult assemble_ea_eb(const GridSpec& g, const std::vector<double>& c1,
                          const std::vector<double>& c2, const std::vector<double>& cg,
                          const LevelSpectra& f_hat, const LevelSpectra& dzf_hat);

// Given Gm, Gp (spectral levels), return the Dirichlet-form bulk
//   1/2 (T2 - T3) Gm - 1/2 T1 Gp      (top slope: Gmid(0)/2 + Gp(0)/2 - |k| T2 Gm (0))
// or the Neumann-form bulk
//   1/2 (T2 + T3) Gm - 1/2 T1 Gp      (top slope: Gm(0)/2 + Gp(0)/2)
// The returned slope_top is the exact z-derivative of the bulk at z = 0 of
// the kernel representation (no stencils).
struct BulkResult {
  LevelSpectra bulk;
  std::vector<cplx> slope_top;
};
BulkResult bulk_dirichlet(const GridSpec& g, const LevelSpectra& Gm, const LevelSpectra& Gp);
BulkResult bulk_neumann(const GridSpec& g, const LevelSpectra& Gm, const LevelSpectra& Gp);

// spectral helpers on single planes
std::vector<cplx> hat_of_plane(const GridSpec& g, const std::vector<double>& p);
std::vector<double> plane_of_hat(const GridSpec& g, const std::vector<cplx>& chat);
std::vector<cplx> riesz_div_hat(const GridSpec& g, const std::vector<double>& v1,
                                const std::vector<double>& v2);

}  // namespace maps
}  // namespace vwave
