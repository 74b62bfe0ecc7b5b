#include "ordlat/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace ordlat::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const RowOps* initial_backend() {
  if (const char* env = std::getenv("ORDLAT_KERNELS"); env && std::string_view(env) == "scalar")
    return &scalar_ops();
  if (const RowOps* fast = avx2_ops()) return fast;
  return &scalar_ops();
}

std::atomic<const RowOps*>& current() {
  static std::atomic<const RowOps*> ops{initial_backend()};
  return ops;
}

}  // namespace

const RowOps* avx2_ops() {
#ifdef ORDLAT_HAVE_AVX2
  static const bool supported = cpu_has_avx2();
  return supported ? detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const RowOps& active() { return *current().load(std::memory_order_acquire); }

bool select(Backend backend) {
  const RowOps* ops = backend == Backend::scalar ? &scalar_ops() : avx2_ops();
  if (!ops) return false;
  current().store(ops, std::memory_order_release);
  return true;
}

}  // namespace ordlat::kernels
