#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace fhent::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

// Backends usable on this CPU; Scalar is always first.
std::vector<Backend> available_backends();

// Backend picked at first use (best available unless FHENT_KERNELS=scalar).
Backend active_backend();

// Pins the backend, for tests. Throws DomainError if unavailable.
void force_backend(Backend b);

double dot(const double* a, const double* b, std::size_t n);

// sum_k a[k] * b[k] * c[k]
double dot3(const double* a, const double* b, const double* c, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
}  // namespace neon
#endif

}  // namespace fhent::kernels
