#include "walkper/kernels.hpp"

namespace walkper::kernels {
namespace {

void mod_axpy_scalar(double* y, const double* x, double c, std::size_t n, const ModPrime& mod) {
    const auto p = std::int64_t(mod.p);
    const auto ci = std::int64_t(c);
    for (std::size_t i = 0; i < n; ++i) y[i] = double((std::int64_t(y[i]) + ci * std::int64_t(x[i])) % p);
}

void axpy_scalar(double* y, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double squared_distance_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

constexpr KernelTable kScalar{"scalar", mod_axpy_scalar, axpy_scalar, dot_scalar, squared_distance_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace walkper::kernels
