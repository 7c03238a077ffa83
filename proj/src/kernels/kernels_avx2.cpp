// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include "walkper/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

#include <cmath>

namespace walkper::kernels {
namespace {

inline double mod_reduce(double t, const ModPrime& mod) {
    double q = std::floor(t * mod.inv);
    double r = std::fma(-q, double(mod.p), t);
    if (r < 0) r += mod.p;
    if (r >= mod.p) r -= mod.p;
    return r;
}

void mod_axpy_avx2(double* y, const double* x, double c, std::size_t n, const ModPrime& mod) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vp = _mm256_set1_pd(double(mod.p));
    const __m256d vinv = _mm256_set1_pd(mod.inv);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_fmadd_pd(vc, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
        __m256d r = _mm256_fnmadd_pd(q, vp, t);
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] = mod_reduce(std::fma(c, x[i], y[i]), mod);
}

void axpy_avx2(double* y, const double* x, double a, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double squared_distance_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

constexpr KernelTable kAvx2{"avx2", mod_axpy_avx2, axpy_avx2, dot_avx2, squared_distance_avx2};

}  // namespace

const KernelTable* avx2_kernels_compiled() { return &kAvx2; }

}  // namespace walkper::kernels

#else

namespace walkper::kernels {
const KernelTable* avx2_kernels_compiled() { return nullptr; }
}  // namespace walkper::kernels

#endif
