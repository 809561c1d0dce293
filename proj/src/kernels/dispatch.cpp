#include <atomic>
#include <stdexcept>

#include "mpfv/kernels.hpp"

namespace mpfv::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() { return available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

bool available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!available(b)) throw std::runtime_error("kernel backend not available on this CPU");
  return b == Backend::Avx2 ? *detail::avx2_table() : detail::scalar_table();
}

const KernelTable& active() { return table(current().load(std::memory_order_relaxed)); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void select(Backend b) {
  if (!available(b)) throw std::runtime_error("kernel backend not available on this CPU");
  current().store(b, std::memory_order_relaxed);
}

std::string_view name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace mpfv::kernels
