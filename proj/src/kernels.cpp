#include "matformer/kernels.hpp"

namespace matformer::nn::kernels {

double dot(const double* x, const double* y, int n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0, s6 = 0, s7 = 0;
    int i = 0;
    for (; i + 8 <= n; i += 8) {
        s0 += x[i] * y[i];
        s1 += x[i + 1] * y[i + 1];
        s2 += x[i + 2] * y[i + 2];
        s3 += x[i + 3] * y[i + 3];
        s4 += x[i + 4] * y[i + 4];
        s5 += x[i + 5] * y[i + 5];
        s6 += x[i + 6] * y[i + 6];
        s7 += x[i + 7] * y[i + 7];
    }
    double s = ((s0 + s1) + (s2 + s3)) + ((s4 + s5) + (s6 + s7));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy(double s, const double* x, double* y, int n, bool accumulate) {
    if (accumulate) {
        for (int j = 0; j < n; ++j) y[j] += s * x[j];
    } else {
        for (int j = 0; j < n; ++j) y[j] = s * x[j];
    }
}

void mm_nn(const double* a, const double* b, double* c, int m, int k, int n,
           int lda, int ldb, int ldc, bool accumulate) {
    for (int i = 0; i < m; ++i) {
        double* ci = c + static_cast<int64_t>(i) * ldc;
        if (!accumulate)
            for (int j = 0; j < n; ++j) ci[j] = 0.0;
        const double* ai = a + static_cast<int64_t>(i) * lda;
        for (int p = 0; p < k; ++p) {
            const double s = ai[p];
            const double* bp = b + static_cast<int64_t>(p) * ldb;
            for (int j = 0; j < n; ++j) ci[j] += s * bp[j];
        }
    }
}

void mm_nt(const double* a, const double* b, double* c, int m, int k, int n,
           int lda, int ldb, int ldc, bool accumulate) {
    for (int i = 0; i < m; ++i) {
        const double* ai = a + static_cast<int64_t>(i) * lda;
        double* ci = c + static_cast<int64_t>(i) * ldc;
        for (int j = 0; j < n; ++j) {
            const double v = dot(ai, b + static_cast<int64_t>(j) * ldb, k);
            if (accumulate)
                ci[j] += v;
            else
                ci[j] = v;
        }
    }
}

void mm_tn(const double* a, const double* b, double* c, int m, int k, int n,
           int lda, int ldb, int ldc, bool accumulate) {
    if (!accumulate) {
        for (int i = 0; i < m; ++i) {
            double* ci = c + static_cast<int64_t>(i) * ldc;
            for (int j = 0; j < n; ++j) ci[j] = 0.0;
        }
    }
    for (int p = 0; p < k; ++p) {
        const double* ap = a + static_cast<int64_t>(p) * lda;
        const double* bp = b + static_cast<int64_t>(p) * ldb;
        for (int i = 0; i < m; ++i) {
            const double s = ap[i];
            double* ci = c + static_cast<int64_t>(i) * ldc;
            for (int j = 0; j < n; ++j) ci[j] += s * bp[j];
        }
    }
}

}  // namespace matformer::nn::kernels
