#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace fracterp::detail {

namespace {
std::mutex plan_mutex;  // FFTW planning is not thread-safe; execution is
}

void fft(std::vector<std::complex<double>>& v, bool inverse) {
  if (v.empty()) return;
  auto* data = reinterpret_cast<fftw_complex*>(v.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(v.size()), data, data,
                            inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace fracterp::detail
