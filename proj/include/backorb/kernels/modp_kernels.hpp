#pragma once

#include <cstddef>
#include <cstdint>

// Word-level F_p kernels for the dense mod-p polynomial layer.  Primes are
// required to satisfy p < 2^31 so that sums fit in 32 bits and Shoup
// multiplication works on 32x32->64 products.
//
// Scalar versions are the reference semantics; the AVX2 versions must be
// bit-identical on every input and are checked against the scalar ones in
// the kernel equivalence tests.  Dispatch happens once, at first use.

namespace backorb::kernels {

// floor(w * 2^32 / p), the Shoup precomputation for multiplying by w.
inline uint32_t shoup_precompute(uint32_t w, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(w) << 32) / p);
}

inline uint32_t mulmod_shoup(uint32_t x, uint32_t w, uint32_t wp, uint32_t p) {
    uint32_t q = static_cast<uint32_t>((static_cast<uint64_t>(wp) * x) >> 32);
    uint64_t r = static_cast<uint64_t>(w) * x - static_cast<uint64_t>(q) * p;
    uint32_t r32 = static_cast<uint32_t>(r);
    return r32 >= p ? r32 - p : r32;
}

inline uint32_t addmod(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t r = a + b;
    return r >= p ? r - p : r;
}

inline uint32_t submod(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

struct ModpKernels {
    // out[i] = a[i] + b[i] mod p
    void (*vec_add)(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p);
    // out[i] = a[i] - b[i] mod p
    void (*vec_sub)(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p);
    // out[i] = w * a[i] mod p
    void (*vec_scale)(const uint32_t* a, uint32_t* out, size_t n, uint32_t w, uint32_t wp,
                      uint32_t p);
    // acc[i] = acc[i] + w * a[i] mod p  (the polynomial-multiply inner row)
    void (*vec_axpy)(uint32_t* acc, const uint32_t* a, size_t n, uint32_t w, uint32_t wp,
                     uint32_t p);
    const char* name;
};

namespace scalar {
void vec_add(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p);
void vec_sub(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p);
void vec_scale(const uint32_t* a, uint32_t* out, size_t n, uint32_t w, uint32_t wp, uint32_t p);
void vec_axpy(uint32_t* acc, const uint32_t* a, size_t n, uint32_t w, uint32_t wp, uint32_t p);
}  // namespace scalar

namespace avx2 {
// Defined on x86-64 builds; entry points safe to call only when
// cpu_has_avx2() is true.
void vec_add(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p);
void vec_sub(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p);
void vec_scale(const uint32_t* a, uint32_t* out, size_t n, uint32_t w, uint32_t wp, uint32_t p);
void vec_axpy(uint32_t* acc, const uint32_t* a, size_t n, uint32_t w, uint32_t wp, uint32_t p);
}  // namespace avx2

bool cpu_has_avx2();

const ModpKernels& scalar_kernels();
const ModpKernels& avx2_kernels();

// Dispatched kernel set: AVX2 when the CPU supports it, scalar otherwise.
const ModpKernels& active_kernels();

}  // namespace backorb::kernels
