#include "gia/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace gia::kernels {

const Ops& avx2_ops();  // defined in kernels_avx2.cpp

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

std::atomic<const Ops*> g_active{nullptr};
std::atomic<bool> g_is_avx2{false};

const Ops* resolve(Impl impl) {
  switch (impl) {
    case Impl::Scalar:
      g_is_avx2 = false;
      return &scalar_ops();
    case Impl::Avx2:
      if (!avx2_supported()) throw std::runtime_error("AVX2 not supported on this CPU");
      g_is_avx2 = true;
      return &avx2_ops();
    case Impl::Auto:
    default:
      if (avx2_supported()) {
        g_is_avx2 = true;
        return &avx2_ops();
      }
      g_is_avx2 = false;
      return &scalar_ops();
  }
}

Impl env_impl() {
  const char* e = std::getenv("GIA_KERNELS");
  if (!e) return Impl::Auto;
  if (std::strcmp(e, "scalar") == 0) return Impl::Scalar;
  if (std::strcmp(e, "avx2") == 0) return Impl::Avx2;
  return Impl::Auto;
}

}  // namespace

const Ops& ops() {
  const Ops* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = resolve(env_impl());
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void set_impl(Impl impl) {
  g_active.store(resolve(impl), std::memory_order_release);
}

std::string active_impl_name() {
  ops();
  return g_is_avx2 ? "avx2" : "scalar";
}

}  // namespace gia::kernels
