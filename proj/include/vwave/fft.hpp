#pragma once

#include <complex>
#include <vector>

namespace vwave {

// Thin wrapper over FFTW c2c 2D transforms with a process-wide plan cache.
// Plans are created once per size under a lock (FFTW planning is not
// thread-safe); execution uses the new-array interface and is safe to call
// concurrently on distinct buffers.  Plans are created FFTW_UNALIGNED so any
// std::vector storage qualifies.
namespace fft {

using cplx = std::complex<double>;

// in-place forward DFT, unnormalized (sum e^{-i 2pi jm/N}), layout [i2*N+i1]
void forward2d(int N, cplx* data);
// in-place inverse DFT, unnormalized (sum e^{+i 2pi jm/N})
void inverse2d(int N, cplx* data);

}  // namespace fft
}  // namespace vwave
