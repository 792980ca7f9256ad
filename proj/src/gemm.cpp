#include "rxeend/tensor.hpp"

// Fortran BLAS entry points (column-major). Row-major products are computed
// through the usual transposition trick: C_rm = A_rm * B_rm is the same
// memory as C_cm^T, and C_cm^T = (B_cm^T)(A_cm^T).
extern "C" {
void sgemm_(const char* transa, const char* transb, const int* m, const int* n, const int* k,
            const float* alpha, const float* a, const int* lda, const float* b, const int* ldb,
            const float* beta, float* c, const int* ldc);
void dgemm_(const char* transa, const char* transb, const int* m, const int* n, const int* k,
            const double* alpha, const double* a, const int* lda, const double* b, const int* ldb,
            const double* beta, double* c, const int* ldc);
}

namespace rxeend {

namespace {

template <class S>
void gemm_cm(const char* ta, const char* tb, int m, int n, int k, S alpha, const S* a, int lda,
             const S* b, int ldb, S beta, S* c, int ldc);

template <>
void gemm_cm<float>(const char* ta, const char* tb, int m, int n, int k, float alpha,
                    const float* a, int lda, const float* b, int ldb, float beta, float* c,
                    int ldc) {
    sgemm_(ta, tb, &m, &n, &k, &alpha, a, &lda, b, &ldb, &beta, c, &ldc);
}

template <>
void gemm_cm<double>(const char* ta, const char* tb, int m, int n, int k, double alpha,
                     const double* a, int lda, const double* b, int ldb, double beta, double* c,
                     int ldc) {
    dgemm_(ta, tb, &m, &n, &k, &alpha, a, &lda, b, &ldb, &beta, c, &ldc);
}

}  // namespace

template <class S>
void gemm_rm(bool trans_a, bool trans_b, std::int64_t m, std::int64_t n, std::int64_t k, S alpha,
             const S* a, const S* b, S beta, S* c) {
    // Swap operands: compute C^T (n x m, column-major) = op(B)^T op(A)^T.
    const int mi = static_cast<int>(n);
    const int ni = static_cast<int>(m);
    const int ki = static_cast<int>(k);
    // Row-major A (m x k, or k x m when transposed) viewed column-major has
    // leading dimension equal to its row width.
    const int lda = trans_b ? ki : mi;  // B's row width
    const int ldb = trans_a ? static_cast<int>(m) : ki;
    gemm_cm<S>(trans_b ? "T" : "N", trans_a ? "T" : "N", mi, ni, ki, alpha, b, lda, a, ldb, beta,
               c, mi);
}

template void gemm_rm<float>(bool, bool, std::int64_t, std::int64_t, std::int64_t, float,
                             const float*, const float*, float, float*);
template void gemm_rm<double>(bool, bool, std::int64_t, std::int64_t, std::int64_t, double,
                              const double*, const double*, double, double*);

}  // namespace rxeend
