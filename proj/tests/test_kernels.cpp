#include <doctest.h>

#include <random>

#include "backorb/kernels/modp_kernels.hpp"

using namespace backorb::kernels;

namespace {

std::vector<uint32_t> random_vec(std::mt19937_64& rng, size_t n, uint32_t p) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = static_cast<uint32_t>(rng() % p);
    return v;
}

}  // namespace

TEST_CASE("scalar kernel reference semantics") {
    uint32_t p = 97;
    std::vector<uint32_t> a{5, 96, 0, 50}, b{93, 1, 96, 47}, out(4);
    scalar::vec_add(a.data(), b.data(), out.data(), 4, p);
    CHECK(out == std::vector<uint32_t>{1, 0, 96, 0});
    scalar::vec_sub(a.data(), b.data(), out.data(), 4, p);
    CHECK(out == std::vector<uint32_t>{9, 95, 1, 3});
    uint32_t w = 13, wp = shoup_precompute(w, p);
    scalar::vec_scale(a.data(), out.data(), 4, w, wp, p);
    for (size_t i = 0; i < 4; ++i) CHECK(out[i] == a[i] * 13 % 97);
}

TEST_CASE("avx2 kernels match scalar bit for bit") {
    if (!cpu_has_avx2()) {
        MESSAGE("AVX2 not available on this CPU; dispatch stays scalar");
        return;
    }
    std::mt19937_64 rng(20260810);
    // primes up to the 2^31 ceiling, vector lengths around the 8-lane edges
    std::vector<uint32_t> primes{3, 97, 65537, 1000003, 2147483629u};
    for (uint32_t p : primes) {
        for (size_t n : {0ul, 1ul, 7ul, 8ul, 9ul, 31ul, 64ul, 1000ul, 4097ul}) {
            auto a = random_vec(rng, n, p), b = random_vec(rng, n, p);
            uint32_t w = static_cast<uint32_t>(rng() % p);
            uint32_t wp = shoup_precompute(w, p);

            std::vector<uint32_t> s(n), v(n);
            scalar::vec_add(a.data(), b.data(), s.data(), n, p);
            avx2::vec_add(a.data(), b.data(), v.data(), n, p);
            CHECK(s == v);

            scalar::vec_sub(a.data(), b.data(), s.data(), n, p);
            avx2::vec_sub(a.data(), b.data(), v.data(), n, p);
            CHECK(s == v);

            scalar::vec_scale(a.data(), s.data(), n, w, wp, p);
            avx2::vec_scale(a.data(), v.data(), n, w, wp, p);
            CHECK(s == v);

            auto acc1 = b, acc2 = b;
            scalar::vec_axpy(acc1.data(), a.data(), n, w, wp, p);
            avx2::vec_axpy(acc2.data(), a.data(), n, w, wp, p);
            CHECK(acc1 == acc2);
        }
    }
}

TEST_CASE("dispatch picks a working kernel set") {
    const auto& k = active_kernels();
    std::vector<uint32_t> a{1, 2, 3}, b{4, 5, 6}, out(3);
    k.vec_add(a.data(), b.data(), out.data(), 3, 7);
    CHECK(out == std::vector<uint32_t>{5, 0, 2});
    CHECK((std::string(k.name) == "avx2" || std::string(k.name) == "scalar"));
    if (cpu_has_avx2()) CHECK(std::string(k.name) == "avx2");
}
