// Runtime backend selection. The widest SIMD set supported by both the
// build and the CPU wins; ASGF_KERNEL_BACKEND=scalar|avx2|neon|auto
// overrides, and set_backend() lets tests pin a table explicitly.

#include "asgf/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace asgf::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool cpu_has_neon() {
#if defined(__aarch64__) || defined(_M_ARM64)
  return true;  // NEON is mandatory on aarch64
#else
  return false;
#endif
}

const KernelTable* table_if_supported(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return &kScalarTable;
    case Backend::avx2:
      return cpu_has_avx2() ? avx2_table() : nullptr;
    case Backend::neon:
      return cpu_has_neon() ? neon_table() : nullptr;
  }
  return nullptr;
}

Backend detect_backend() {
  if (const char* env = std::getenv("ASGF_KERNEL_BACKEND")) {
    const std::string choice(env);
    if (choice == "scalar") return Backend::scalar;
    if (choice == "avx2" && table_if_supported(Backend::avx2)) return Backend::avx2;
    if (choice == "neon" && table_if_supported(Backend::neon)) return Backend::neon;
    // "auto" or an unsupported request falls through to detection.
  }
  if (table_if_supported(Backend::avx2)) return Backend::avx2;
  if (table_if_supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct Dispatch {
  std::atomic<Backend> backend;
  std::atomic<const KernelTable*> table;
  Dispatch() {
    const Backend b = detect_backend();
    backend.store(b, std::memory_order_relaxed);
    table.store(table_if_supported(b), std::memory_order_relaxed);
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

const KernelTable* table(Backend backend) { return table_if_supported(backend); }

bool available(Backend backend) { return table_if_supported(backend) != nullptr; }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
    if (available(b)) out.push_back(b);
  }
  return out;
}

Backend active_backend() {
  return dispatch().backend.load(std::memory_order_relaxed);
}

void set_backend(Backend backend) {
  const KernelTable* t = table_if_supported(backend);
  if (t == nullptr) {
    throw std::invalid_argument("kernel backend not available: " +
                                std::string(backend_name(backend)));
  }
  dispatch().backend.store(backend, std::memory_order_relaxed);
  dispatch().table.store(t, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

namespace detail {
const KernelTable& active() {
  return *dispatch().table.load(std::memory_order_relaxed);
}
}  // namespace detail

}  // namespace asgf::kernels
