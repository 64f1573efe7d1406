#include <cstdlib>
#include <string_view>

#include "hidden_ties/kernels.hpp"

namespace hidden_ties::kernels {
namespace {

const Ops& select() {
  const char* env = std::getenv("HIDDEN_TIES_SIMD");
  const std::string_view wanted = env ? env : "auto";

  if (wanted == "scalar") return scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
  if (wanted == "avx2") return avx2_ops();  // caller opted in explicitly
  if (wanted == "auto" && avx2_available()) return avx2_ops();
#endif
#if defined(__aarch64__)
  if (wanted == "neon" || wanted == "auto") return neon_ops();
#endif
  return scalar_ops();
}

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available() { return __builtin_cpu_supports("avx2"); }
#endif

const Ops& active() {
  static const Ops& selected = select();
  return selected;
}

}  // namespace hidden_ties::kernels
