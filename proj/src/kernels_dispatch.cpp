#include <atomic>

#include "qpd/kernels.hpp"

namespace qpd::kernels {

#ifdef QPD_WITH_AVX2
const Table& avx2_table_impl();
#endif

const Table* avx2_table() {
#ifdef QPD_WITH_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &avx2_table_impl();
#endif
  return nullptr;
}

namespace {

std::atomic<const Table*>& active_slot() {
  static std::atomic<const Table*> slot{nullptr};
  return slot;
}

}  // namespace

const Table& active() {
  const Table* t = active_slot().load(std::memory_order_acquire);
  if (!t) {
    t = avx2_table();
    if (!t) t = &scalar_table();
    active_slot().store(t, std::memory_order_release);
  }
  return *t;
}

void set_active(const Table& table) {
  active_slot().store(&table, std::memory_order_release);
}

}  // namespace qpd::kernels
