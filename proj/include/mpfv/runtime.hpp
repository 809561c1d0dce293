#pragma once

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace mpfv {

/// Keeps freed field buffers in the heap instead of returning them to the OS after every stage.
inline void retain_freed_memory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

}  // namespace mpfv
