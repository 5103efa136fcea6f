#include "qtetra/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qtetra::kernels {
namespace {

Isa detect() {
    if (const char* env = std::getenv("QTETRA_ISA")) {
        const std::string v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && avx2_table() != nullptr) return Isa::avx2;
    }
    return avx2_table() != nullptr ? Isa::avx2 : Isa::scalar;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> ptr{detect() == Isa::avx2 ? avx2_table() : &scalar_table()};
    return ptr;
}

}  // namespace

bool isa_available(Isa isa) { return isa == Isa::scalar || avx2_table() != nullptr; }

Isa active_isa() { return current().load() == &scalar_table() ? Isa::scalar : Isa::avx2; }

void force_isa(Isa isa) {
    if (!isa_available(isa)) throw std::invalid_argument("requested ISA is not available on this CPU");
    current().store(isa == Isa::avx2 ? avx2_table() : &scalar_table());
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

}  // namespace qtetra::kernels
