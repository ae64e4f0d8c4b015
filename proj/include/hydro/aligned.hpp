#pragma once

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <new>
#include <vector>

namespace hydro {

/// 64-byte aligned storage so every array shares the alignment the FFT plans were made with.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}

  T* allocate(std::size_t n) {
    std::size_t bytes = ((n * sizeof(T) + 63) / 64) * 64;
    if (bytes == 0) bytes = 64;
    void* p = std::aligned_alloc(64, bytes);
    if (!p) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) { std::free(p); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
  template <class U>
  bool operator!=(const AlignedAllocator<U>&) const { return false; }
};

using RealArray = std::vector<double, AlignedAllocator<double>>;
using ComplexArray = std::vector<std::complex<double>, AlignedAllocator<std::complex<double>>>;

}  // namespace hydro
