#include <atomic>
#include <cstdlib>
#include <cstring>

#include "fhent/errors.hpp"
#include "fhent/kernels.hpp"

namespace fhent::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using Dot3Fn = double (*)(const double*, const double*, const double*, std::size_t);

struct Table {
    Backend backend;
    DotFn dot;
    Dot3Fn dot3;
};

bool cpu_has(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Table table_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2:
            return {b, &avx2::dot, &avx2::dot3};
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            return {b, &neon::dot, &neon::dot3};
#endif
        default:
            return {Backend::Scalar, &scalar::dot, &scalar::dot3};
    }
}

Table pick_default() {
    const char* env = std::getenv("FHENT_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return table_for(Backend::Scalar);
    auto av = available_backends();
    return table_for(av.back());
}

std::atomic<const Table*> g_table{nullptr};

const Table& table() {
    const Table* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        static const Table def = pick_default();
        const Table* expected = nullptr;
        g_table.compare_exchange_strong(expected, &def, std::memory_order_acq_rel);
        t = g_table.load(std::memory_order_acquire);
    }
    return *t;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::Scalar};
    if (cpu_has(Backend::Avx2)) out.push_back(Backend::Avx2);
    if (cpu_has(Backend::Neon)) out.push_back(Backend::Neon);
    return out;
}

Backend active_backend() { return table().backend; }

void force_backend(Backend b) {
    if (!cpu_has(b)) throw DomainError("kernel backend not available on this CPU");
    static const Table tables[] = {table_for(Backend::Scalar), table_for(Backend::Avx2),
                                   table_for(Backend::Neon)};
    g_table.store(&tables[static_cast<int>(b)], std::memory_order_release);
}

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    return table().dot3(a, b, c, n);
}

}  // namespace fhent::kernels
