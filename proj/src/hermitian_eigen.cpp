#include "qss/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>

#include "qss/errors.hpp"

namespace qss {

namespace {

// One cyclic sweep of two-sided complex Jacobi rotations. Returns the
// Frobenius norm of the remaining off-diagonal part.
double jacobi_sweep(std::vector<c64>& a, std::size_t n) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const c64 apq = a[p * n + q];
            const double g = std::abs(apq);
            if (g == 0.0) continue;
            const double app = a[p * n + p].real();
            const double aqq = a[q * n + q].real();
            const c64 phase = apq / g;

            // tan(2θ) = 2|a_pq| / (a_pp − a_qq), smaller-angle root
            const double tau = (aqq - app) / (2.0 * g);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            // Unitary rotation in the (p,q) plane:
            //   col_p' =  c·col_p − s·conj(phase)·col_q
            //   col_q' =  s·phase·col_p + c·col_q
            for (std::size_t k = 0; k < n; ++k) {
                const c64 akp = a[k * n + p];
                const c64 akq = a[k * n + q];
                a[k * n + p] = c * akp - s * std::conj(phase) * akq;
                a[k * n + q] = s * phase * akp + c * akq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const c64 apk = a[p * n + k];
                const c64 aqk = a[q * n + k];
                a[p * n + k] = c * apk - s * phase * aqk;
                a[q * n + k] = s * std::conj(phase) * apk + c * aqk;
            }
            // clean up what should be exactly real / zero
            a[p * n + p] = c64{a[p * n + p].real(), 0.0};
            a[q * n + q] = c64{a[q * n + q].real(), 0.0};
            a[p * n + q] = c64{0.0, 0.0};
            a[q * n + p] = c64{0.0, 0.0};
        }
    }
    double off = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) off += std::norm(a[r * n + c]);
    return std::sqrt(2.0 * off);
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
    if (m.dim() == 0) throw ValidationError("hermitian_eigenvalues: empty matrix");
    if (!m.all_finite())
        throw ValidationError("hermitian_eigenvalues: non-finite entries");
    if (m.hermiticity_defect() > hermitian_tol)
        throw ValidationError("hermitian_eigenvalues: matrix is not Hermitian");

    const std::size_t n = m.dim();
    std::vector<c64> a(m.data(), m.data() + n * n);
    // symmetrize exactly so rounding in the input cannot bias the sweeps
    for (std::size_t r = 0; r < n; ++r) {
        a[r * n + r] = c64{a[r * n + r].real(), 0.0};
        for (std::size_t c = r + 1; c < n; ++c) {
            const c64 v = 0.5 * (a[r * n + c] + std::conj(a[c * n + r]));
            a[r * n + c] = v;
            a[c * n + r] = std::conj(v);
        }
    }

    double scale = 0.0;
    for (const auto& v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    const double stop = 1e-15 * scale * static_cast<double>(n);
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (jacobi_sweep(a, n) <= stop) break;
    }

    std::vector<double> evals(n);
    for (std::size_t i = 0; i < n; ++i) evals[i] = a[i * n + i].real();
    std::sort(evals.begin(), evals.end());
    return evals;
}

double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol) {
    return hermitian_eigenvalues(m, hermitian_tol).front();
}

} // namespace qss
