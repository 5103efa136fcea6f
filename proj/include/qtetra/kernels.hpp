#pragma once

// Integer vector kernels used by the exponent-vector inner loops
// (monomial products, commutation exponents, operator actions).
// Each kernel has a scalar reference and an AVX2 variant; the variant
// is chosen once at runtime from CPU features and can be pinned with
// QTETRA_ISA=scalar|avx2 or force_isa().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qtetra::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    // sum_i a[i] * b[i]; caller guarantees no int32 overflow.
    std::int32_t (*dot)(const std::int32_t* a, const std::int32_t* b, std::size_t n);
    // out[i] = a[i] + b[i]; out may alias a or b.
    void (*add)(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(std::int32_t alpha, const std::int32_t* x, std::int32_t* y, std::size_t n);
    std::int32_t (*sum)(const std::int32_t* a, std::size_t n);
    // min over a; returns INT32_MAX for n == 0
    std::int32_t (*min)(const std::int32_t* a, std::size_t n);
};

const KernelTable& scalar_table();
// Null when the build or the CPU has no AVX2.
const KernelTable* avx2_table();

Isa active_isa();
void force_isa(Isa isa);
std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

const KernelTable& active();

inline std::int32_t dot(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    return active().dot(a.data(), b.data(), a.size());
}
inline void add(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                std::span<std::int32_t> out) {
    active().add(a.data(), b.data(), out.data(), out.size());
}
inline void axpy(std::int32_t alpha, std::span<const std::int32_t> x, std::span<std::int32_t> y) {
    active().axpy(alpha, x.data(), y.data(), y.size());
}
inline std::int32_t sum(std::span<const std::int32_t> a) { return active().sum(a.data(), a.size()); }
inline std::int32_t min(std::span<const std::int32_t> a) { return active().min(a.data(), a.size()); }

}  // namespace qtetra::kernels
