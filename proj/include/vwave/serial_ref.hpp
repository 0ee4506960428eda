#pragma once

#include "vwave/halfspace.hpp"
#include "vwave/spectral_field.hpp"

namespace vwave {
// Serial reference implementations of the parallel kernels.  Same contracts,
// straightforward loops, no OpenMP; the unit tests compare results against
// the production kernels and the benchmark tool compares wall time.
namespace ref {

// direct O(N^4) DFT; doubles as the transform oracle
SpectralField2D forward_transform_direct(const GridSpec& g, const std::vector<double>& samples);
std::vector<double> inverse_transform_direct(const SpectralField2D& f);

SpectralField2D apply_multiplier(const MultiplierSymbol& m, const SpectralField2D& f);
HalfSpaceScalar poisson_extend(const SpectralField2D& f);
HalfSpaceScalar kernel_integral(halfspace::TKind kind, const HalfSpaceScalar& f);
HalfSpaceScalar vertical_derivative(const HalfSpaceScalar& f, int order);
SpectralField2D dealiased_product(const SpectralField2D& a, const SpectralField2D& b);

}  // namespace ref
}  // namespace vwave
