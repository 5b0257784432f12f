#include "nekrasov/power_chain.hpp"

#include <algorithm>
#include <vector>

namespace nekrasov::kernels {

namespace {
constexpr std::size_t kChunk = 256;
}

void convolve_block(double* out, std::size_t lo, std::size_t hi, const double* prev,
                    const double* base, std::size_t prev_first_nonzero) {
  const std::size_t width = hi - lo;
  std::fill(out + lo, out + hi, 0.0);
  std::vector<double> partial(width);
  for (std::size_t chunk = prev_first_nonzero; chunk < hi; chunk += kChunk) {
    const std::size_t chunk_end = std::min(chunk + kChunk, hi);
    std::fill(partial.begin(), partial.end(), 0.0);
    double* const acc = partial.data();
    for (std::size_t m = chunk; m < chunk_end; ++m) {
      const double a = prev[m];
      if (a == 0.0) continue;
      const std::size_t n_begin = std::max(lo, m);
      const double* const b = base + (n_begin - m);
      double* const dst = acc + (n_begin - lo);
      const std::size_t count = hi - n_begin;
      for (std::size_t t = 0; t < count; ++t) dst[t] += a * b[t];
    }
    for (std::size_t t = 0; t < width; ++t) out[lo + t] += acc[t];
  }
}

}  // namespace nekrasov::kernels
