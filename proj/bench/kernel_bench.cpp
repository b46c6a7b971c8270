// Timing comparison: OpenMP kernels against the serial reference, across the
// matrix sizes the simulator actually touches.

#include <cstdio>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#else
#include <chrono>
#endif

#include "qss/kernels.hpp"
#include "qss/rng.hpp"

namespace {

double now() {
#if defined(_OPENMP)
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

std::vector<qss::c64> random_matrix(std::size_t dim, qss::Rng& rng) {
    std::vector<qss::c64> m(dim * dim);
    for (auto& v : m) v = qss::c64{rng.uniform() - 0.5, rng.uniform() - 0.5};
    return m;
}

double max_diff(const std::vector<qss::c64>& a, const std::vector<qss::c64>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

} // namespace

int main() {
    qss::Rng rng(20240811);
#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-22s %6s %12s %12s %9s %10s\n", "kernel", "dim", "serial-ref[s]",
                "parallel[s]", "speedup", "max|diff|");

    for (std::size_t dim : {64u, 128u, 256u, 512u}) {
        const auto a = random_matrix(dim, rng);
        const auto b = random_matrix(dim, rng);
        std::vector<qss::c64> out1(dim * dim), out2(dim * dim);
        const int reps = dim <= 128 ? 5 : 2;

        double ts = time_best_of(reps, [&] { qss::kernels::ref::matmul(a.data(), b.data(), out1.data(), dim); });
        double tp = time_best_of(reps, [&] { qss::kernels::matmul(a.data(), b.data(), out2.data(), dim); });
        std::printf("%-22s %6zu %12.5f %12.5f %8.2fx %10.2e\n", "matmul", dim, ts, tp,
                    ts / tp, max_diff(out1, out2));
    }

    for (std::size_t half : {16u, 32u}) {
        const auto a = random_matrix(half, rng);
        const auto b = random_matrix(half, rng);
        const std::size_t dim = half * half;
        std::vector<qss::c64> out1(dim * dim), out2(dim * dim);
        double ts = time_best_of(3, [&] { qss::kernels::ref::kron(a.data(), half, b.data(), half, out1.data()); });
        double tp = time_best_of(3, [&] { qss::kernels::kron(a.data(), half, b.data(), half, out2.data()); });
        std::printf("%-22s %6zu %12.5f %12.5f %8.2fx %10.2e\n", "kron", dim, ts, tp,
                    ts / tp, max_diff(out1, out2));
    }

    for (std::size_t nq : {7u, 8u, 9u}) {
        const std::size_t dim = std::size_t{1} << nq;
        const auto rho = random_matrix(dim, rng);
        const auto gate = random_matrix(2, rng);
        std::vector<qss::c64> out1(dim * dim), out2(dim * dim);
        const std::vector<int> targets{static_cast<int>(nq / 2)};
        double ts = time_best_of(3, [&] {
            qss::kernels::ref::conjugate_on_targets(rho.data(), nq, gate.data(), targets, out1.data());
        });
        double tp = time_best_of(3, [&] {
            qss::kernels::conjugate_on_targets(rho.data(), nq, gate.data(), targets, out2.data());
        });
        std::printf("%-22s %6zu %12.5f %12.5f %8.2fx %10.2e\n", "conjugate(1 qubit)", dim,
                    ts, tp, ts / tp, max_diff(out1, out2));
    }

    for (std::size_t nq : {8u, 10u}) {
        const std::size_t dim = std::size_t{1} << nq;
        const auto rho = random_matrix(dim, rng);
        const std::uint32_t keep = (1u << (nq / 2)) - 1u;
        const std::size_t out_dim = std::size_t{1} << (nq / 2);
        std::vector<qss::c64> out1(out_dim * out_dim), out2(out_dim * out_dim);
        double ts = time_best_of(3, [&] { qss::kernels::ref::partial_trace(rho.data(), nq, keep, out1.data()); });
        double tp = time_best_of(3, [&] { qss::kernels::partial_trace(rho.data(), nq, keep, out2.data()); });
        std::printf("%-22s %6zu %12.5f %12.5f %8.2fx %10.2e\n", "partial_trace", dim, ts,
                    tp, ts / tp, max_diff(out1, out2));
    }
    return 0;
}
