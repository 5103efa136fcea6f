#include "qtetra/kernels.hpp"

#include <climits>

#if defined(QTETRA_HAVE_AVX2)
#include <immintrin.h>

namespace qtetra::kernels {
namespace {

inline std::int32_t hsum_epi32(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}

inline std::int32_t hmin_epi32(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_min_epi32(lo, hi);
    s = _mm_min_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_min_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}

inline __m256i load8(const std::int32_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::int32_t dot_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(load8(a + i), load8(b + i)));
    std::int32_t r = hsum_epi32(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

void add_avx2(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi32(load8(a + i), load8(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void axpy_avx2(std::int32_t alpha, const std::int32_t* x, std::int32_t* y, std::size_t n) {
    const __m256i va = _mm256_set1_epi32(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i r = _mm256_add_epi32(load8(y + i), _mm256_mullo_epi32(va, load8(x + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

std::int32_t sum_avx2(const std::int32_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) acc = _mm256_add_epi32(acc, load8(a + i));
    std::int32_t r = hsum_epi32(acc);
    for (; i < n; ++i) r += a[i];
    return r;
}

std::int32_t min_avx2(const std::int32_t* a, std::size_t n) {
    std::int32_t r = INT32_MAX;
    std::size_t i = 0;
    if (n >= 8) {
        __m256i acc = _mm256_set1_epi32(INT32_MAX);
        for (; i + 8 <= n; i += 8) acc = _mm256_min_epi32(acc, load8(a + i));
        r = hmin_epi32(acc);
    }
    for (; i < n; ++i) r = a[i] < r ? a[i] : r;
    return r;
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table{dot_avx2, add_avx2, axpy_avx2, sum_avx2, min_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
}

}  // namespace qtetra::kernels

#else

namespace qtetra::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace qtetra::kernels

#endif
