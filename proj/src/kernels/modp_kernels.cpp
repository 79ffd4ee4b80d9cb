#include "backorb/kernels/modp_kernels.hpp"

namespace backorb::kernels {

namespace scalar {

void vec_add(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) out[i] = addmod(a[i], b[i], p);
}

void vec_sub(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) out[i] = submod(a[i], b[i], p);
}

void vec_scale(const uint32_t* a, uint32_t* out, size_t n, uint32_t w, uint32_t wp, uint32_t p) {
    for (size_t i = 0; i < n; ++i) out[i] = mulmod_shoup(a[i], w, wp, p);
}

void vec_axpy(uint32_t* acc, const uint32_t* a, size_t n, uint32_t w, uint32_t wp, uint32_t p) {
    for (size_t i = 0; i < n; ++i) acc[i] = addmod(acc[i], mulmod_shoup(a[i], w, wp, p), p);
}

}  // namespace scalar

const ModpKernels& scalar_kernels() {
    static const ModpKernels k{scalar::vec_add, scalar::vec_sub, scalar::vec_scale,
                               scalar::vec_axpy, "scalar"};
    return k;
}

const ModpKernels& active_kernels() {
    static const ModpKernels& k = cpu_has_avx2() ? avx2_kernels() : scalar_kernels();
    return k;
}

}  // namespace backorb::kernels
