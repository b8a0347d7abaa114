#pragma once

#include <cstddef>

namespace bgev::kernels {

// Sum of log-densities over a data block. Points outside the support are
// excluded from the sum and counted; callers decide whether a nonzero
// count means -inf (the GEV likelihood does).
struct LogPdfSum {
  double sum = 0.0;
  std::size_t out_of_support = 0;
};

enum class Backend { kAuto, kScalar, kAvx2 };

// Dispatched entry points. Backend is chosen at first use from CPU
// features; BGEV_KERNELS=scalar|avx2 in the environment overrides.
LogPdfSum gumbel_log_pdf_sum(const double* x, std::size_t n, double mu,
                             double sigma);
LogPdfSum gev_log_pdf_sum(const double* x, std::size_t n, double mu,
                          double sigma, double xi);

Backend active_backend();
void set_backend(Backend b);  // kAuto re-detects
bool avx2_available();

// Reference implementations, always built; the dispatched variants are
// equivalence-tested against these.
namespace scalar {
LogPdfSum gumbel_log_pdf_sum(const double* x, std::size_t n, double mu,
                             double sigma);
LogPdfSum gev_log_pdf_sum(const double* x, std::size_t n, double mu,
                          double sigma, double xi);
}  // namespace scalar

#if defined(BGEV_HAVE_AVX2)
namespace avx2 {
LogPdfSum gumbel_log_pdf_sum(const double* x, std::size_t n, double mu,
                             double sigma);
LogPdfSum gev_log_pdf_sum(const double* x, std::size_t n, double mu,
                          double sigma, double xi);
}  // namespace avx2
#endif

}  // namespace bgev::kernels
