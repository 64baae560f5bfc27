#include "edgechroma/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <stdexcept>
#include <string_view>

#include "kernel_table.hpp"

namespace edgechroma::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelTable* table_for(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return &scalar_table();
        case Backend::avx2:
#if defined(__x86_64__)
            return &avx2_table();
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Backend detect_default() {
    if (const char* env = std::getenv("EDGECHROMA_BACKEND")) {
        if (std::strcmp(env, "scalar") == 0) {
            return Backend::scalar;
        }
        if (std::strcmp(env, "avx2") == 0) {
            if (cpu_has_avx2()) {
                return Backend::avx2;
            }
            std::cerr << "edgechroma: EDGECHROMA_BACKEND=avx2 requested but "
                         "the CPU lacks AVX2; using scalar\n";
            return Backend::scalar;
        }
        std::cerr << "edgechroma: ignoring unknown EDGECHROMA_BACKEND value '"
                  << env << "'\n";
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<const KernelTable*>& current_table() {
    static std::atomic<const KernelTable*> table{table_for(detect_default())};
    return table;
}

}  // namespace

const KernelTable& active() {
    return *current_table().load(std::memory_order_relaxed);
}

Backend active_backend() {
    return active().name == std::string_view("avx2") ? Backend::avx2
                                                     : Backend::scalar;
}

bool backend_available(Backend backend) {
    if (backend == Backend::avx2) {
        return cpu_has_avx2();
    }
    return true;
}

void use_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw std::invalid_argument("kernel backend '" + backend_name(backend) +
                                    "' is not available on this machine");
    }
    current_table().store(table_for(backend), std::memory_order_relaxed);
}

std::string backend_name(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> result{Backend::scalar};
    if (backend_available(Backend::avx2)) {
        result.push_back(Backend::avx2);
    }
    return result;
}

}  // namespace edgechroma::kernels
