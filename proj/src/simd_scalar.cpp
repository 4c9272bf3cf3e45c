#include "wh/simd.hpp"

namespace wh::simd::detail {

void fwht_scalar(double* d, std::size_t len) {
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = d[j];
                double b = d[j + h];
                d[j] = a + b;
                d[j + h] = a - b;
            }
        }
    }
}

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

}  // namespace wh::simd::detail
