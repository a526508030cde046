#pragma once

// Runtime SIMD backend selection for the hot vector kernels (see kernels.hpp).
//
// Platform detection is compile-time; which backend actually runs is decided
// at startup from cpuid (x86) / availability (aarch64), and can be overridden
// either programmatically (set_backend, used by the equivalence tests) or via
// the environment variable HOMOG_SIMD=scalar|avx2|neon.

#if defined(__x86_64__) || defined(_M_X64)
#define HOMOG_ARCH_X86 1
#elif defined(__aarch64__) || defined(_M_ARM64)
#define HOMOG_ARCH_ARM64 1
#endif

namespace homog::simd {

enum class Backend { scalar, avx2, neon };

// True if the backend was compiled in and the CPU supports it.
bool backend_available(Backend b);

// Currently active backend (resolved lazily on first kernel call).
Backend active_backend();

// Force a backend; throws std::invalid_argument if unavailable.
void set_backend(Backend b);

const char* backend_name(Backend b);

}  // namespace homog::simd
