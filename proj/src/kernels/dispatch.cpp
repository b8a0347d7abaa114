#include <cstdlib>
#include <cstring>

#include "bgev/kernels.hpp"

namespace bgev::kernels {

namespace {

Backend g_requested = Backend::kAuto;
Backend g_active = Backend::kScalar;
bool g_resolved = false;

Backend resolve() {
  if (g_requested != Backend::kAuto) return g_requested;
  if (const char* env = std::getenv("BGEV_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0) return Backend::kAvx2;
  }
  return avx2_available() ? Backend::kAvx2 : Backend::kScalar;
}

Backend active() {
  if (!g_resolved) {
    g_active = resolve();
    g_resolved = true;
  }
  return g_active;
}

}  // namespace

bool avx2_available() {
#if defined(BGEV_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return active(); }

void set_backend(Backend b) {
  g_requested = b;
  g_resolved = false;
}

LogPdfSum gumbel_log_pdf_sum(const double* x, std::size_t n, double mu,
                             double sigma) {
#if defined(BGEV_HAVE_AVX2)
  if (active() == Backend::kAvx2) return avx2::gumbel_log_pdf_sum(x, n, mu, sigma);
#endif
  return scalar::gumbel_log_pdf_sum(x, n, mu, sigma);
}

LogPdfSum gev_log_pdf_sum(const double* x, std::size_t n, double mu,
                          double sigma, double xi) {
#if defined(BGEV_HAVE_AVX2)
  if (active() == Backend::kAvx2)
    return avx2::gev_log_pdf_sum(x, n, mu, sigma, xi);
#endif
  return scalar::gev_log_pdf_sum(x, n, mu, sigma, xi);
}

}  // namespace bgev::kernels
