#pragma once

#include <cstdint>

namespace matformer::nn::kernels {

// Row-major matrix kernels with explicit leading dimensions (row strides).
// All reductions have a fixed summation order, so results are reproducible
// bit-for-bit and independent of the caller's surrounding computation.

/// dot(x, y) over n elements, 8 partial sums combined pairwise.
double dot(const double* x, const double* y, int n);

/// C[m,n] (+)= A[m,k] * B[k,n]
void mm_nn(const double* a, const double* b, double* c, int m, int k, int n,
           int lda, int ldb, int ldc, bool accumulate);

/// C[m,n] (+)= A[m,k] * B[n,k]^T   (C_ij = dot(A_i, B_j))
void mm_nt(const double* a, const double* b, double* c, int m, int k, int n,
           int lda, int ldb, int ldc, bool accumulate);

/// C[m,n] (+)= A[k,m]^T * B[k,n]   (C_ij = sum_p A_pi * B_pj)
void mm_tn(const double* a, const double* b, double* c, int m, int k, int n,
           int lda, int ldb, int ldc, bool accumulate);

/// y[0..n) (+)= s * x[0..n)
void axpy(double s, const double* x, double* y, int n, bool accumulate);

}  // namespace matformer::nn::kernels
