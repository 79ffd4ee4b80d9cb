#include "backorb/kernels/modp_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BACKORB_X86 1
#include <immintrin.h>
#else
#define BACKORB_X86 0
#endif

namespace backorb::kernels {

bool cpu_has_avx2() {
#if BACKORB_X86 && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

#if BACKORB_X86

namespace avx2 {

// r = a + b; subtract p via unsigned min: min(r, r - p) picks the reduced
// representative because r - p wraps around when r < p.
__attribute__((target("avx2"))) static inline __m256i add_mod8(__m256i a, __m256i b, __m256i vp) {
    __m256i r = _mm256_add_epi32(a, b);
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

__attribute__((target("avx2"))) static inline __m256i sub_mod8(__m256i a, __m256i b, __m256i vp) {
    __m256i r = _mm256_sub_epi32(a, b);
    return _mm256_min_epu32(r, _mm256_add_epi32(r, vp));
}

// Shoup multiply of 8 lanes by the fixed scalar (w, wp):
//   q = hi32(wp * x),  r = lo32(w*x - q*p),  reduce once.
__attribute__((target("avx2"))) static inline __m256i mul_mod8(__m256i x, __m256i vw, __m256i vwp,
                                                               __m256i vp) {
    __m256i xe = x;
    __m256i xo = _mm256_srli_epi64(x, 32);
    __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(xe, vwp), 32);
    __m256i qo = _mm256_srli_epi64(_mm256_mul_epu32(xo, vwp), 32);
    __m256i we = _mm256_mul_epu32(xe, vw);
    __m256i wo = _mm256_mul_epu32(xo, vw);
    __m256i pe = _mm256_mul_epu32(qe, vp);
    __m256i po = _mm256_mul_epu32(qo, vp);
    __m256i re = _mm256_sub_epi64(we, pe);
    __m256i ro = _mm256_sub_epi64(wo, po);
    // merge low 32 bits of the even/odd 64-bit lanes
    __m256i lo = _mm256_blend_epi32(re, _mm256_slli_epi64(ro, 32), 0xAA);
    return _mm256_min_epu32(lo, _mm256_sub_epi32(lo, vp));
}

__attribute__((target("avx2"))) void vec_add(const uint32_t* a, const uint32_t* b, uint32_t* out,
                                             size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), add_mod8(va, vb, vp));
    }
    for (; i < n; ++i) out[i] = addmod(a[i], b[i], p);
}

__attribute__((target("avx2"))) void vec_sub(const uint32_t* a, const uint32_t* b, uint32_t* out,
                                             size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), sub_mod8(va, vb, vp));
    }
    for (; i < n; ++i) out[i] = submod(a[i], b[i], p);
}

__attribute__((target("avx2"))) void vec_scale(const uint32_t* a, uint32_t* out, size_t n,
                                               uint32_t w, uint32_t wp, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
    __m256i vwp = _mm256_set1_epi32(static_cast<int>(wp));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mul_mod8(x, vw, vwp, vp));
    }
    for (; i < n; ++i) out[i] = mulmod_shoup(a[i], w, wp, p);
}

__attribute__((target("avx2"))) void vec_axpy(uint32_t* acc, const uint32_t* a, size_t n,
                                              uint32_t w, uint32_t wp, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
    __m256i vwp = _mm256_set1_epi32(static_cast<int>(wp));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i acc8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        __m256i prod = mul_mod8(x, vw, vwp, vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), add_mod8(acc8, prod, vp));
    }
    for (; i < n; ++i) acc[i] = addmod(acc[i], mulmod_shoup(a[i], w, wp, p), p);
}

}  // namespace avx2

const ModpKernels& avx2_kernels() {
    static const ModpKernels k{avx2::vec_add, avx2::vec_sub, avx2::vec_scale, avx2::vec_axpy,
                               "avx2"};
    return k;
}

#else  // !BACKORB_X86

namespace avx2 {
void vec_add(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p) {
    scalar::vec_add(a, b, out, n, p);
}
void vec_sub(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p) {
    scalar::vec_sub(a, b, out, n, p);
}
void vec_scale(const uint32_t* a, uint32_t* out, size_t n, uint32_t w, uint32_t wp, uint32_t p) {
    scalar::vec_scale(a, out, n, w, wp, p);
}
void vec_axpy(uint32_t* acc, const uint32_t* a, size_t n, uint32_t w, uint32_t wp, uint32_t p) {
    scalar::vec_axpy(acc, a, n, w, wp, p);
}
}  // namespace avx2

const ModpKernels& avx2_kernels() { return scalar_kernels(); }

#endif

}  // namespace backorb::kernels
