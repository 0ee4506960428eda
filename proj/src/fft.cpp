#include "vwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace vwave {
namespace fft {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair& plans_for(int N) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::vector<cplx> scratch(std::size_t(N) * N);
  auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair pp;
  pp.fwd = fftw_plan_dft_2d(N, N, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  pp.bwd = fftw_plan_dft_2d(N, N, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(N, pp).first->second;
}

}  // namespace

void forward2d(int N, cplx* data) {
  PlanPair& pp = plans_for(N);
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(pp.fwd, p, p);
}

void inverse2d(int N, cplx* data) {
  PlanPair& pp = plans_for(N);
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(pp.bwd, p, p);
}

}  // namespace fft
}  // namespace vwave
