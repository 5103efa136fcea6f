#include "qtetra/kernels.hpp"

#include <climits>

namespace qtetra::kernels {
namespace {

std::int32_t dot_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    std::int32_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void add_scalar(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void axpy_scalar(std::int32_t alpha, const std::int32_t* x, std::int32_t* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

std::int32_t sum_scalar(const std::int32_t* a, std::size_t n) {
    std::int32_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

std::int32_t min_scalar(const std::int32_t* a, std::size_t n) {
    std::int32_t m = INT32_MAX;
    for (std::size_t i = 0; i < n; ++i) m = a[i] < m ? a[i] : m;
    return m;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{dot_scalar, add_scalar, axpy_scalar, sum_scalar, min_scalar};
    return table;
}

}  // namespace qtetra::kernels
