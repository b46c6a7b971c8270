// Dense complex-matrix kernels. Every kernel has an OpenMP-parallel
// implementation, used when the matrix is large enough and we are not already
// inside a parallel region (the Monte-Carlo harness parallelizes over trials,
// in which case these run serially per worker). qss::kernels::ref holds
// deliberately naive serial versions kept as a correctness reference for the
// tests and the benchmark.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qss {
using c64 = std::complex<double>;
} // namespace qss

namespace qss::kernels {

// Matrices are row-major, square, dim x dim unless stated otherwise.

// out = a * b
void matmul(const c64* a, const c64* b, c64* out, std::size_t dim);

// out = a (dim_a) (x) b (dim_b), Kronecker product, dim_out = dim_a * dim_b
void kron(const c64* a, std::size_t dim_a, const c64* b, std::size_t dim_b, c64* out);

// rho' = op rho op^dagger where op acts on a subset of qubits.
//
// Index convention: the first qubit of the system is the most significant bit
// of the row index. `targets` lists the qubit positions (0-based from the
// left) the operator acts on; the operator's own qubit order is the order of
// `targets`. op is (2^k x 2^k) with k = targets.size(). op need not be
// unitary (measurement projectors use the same path).
void conjugate_on_targets(const c64* rho, std::size_t n_qubits,
                          const c64* op, const std::vector<int>& targets,
                          c64* out);

// Partial trace. keep_mask bit i set (counting qubit 0 = leftmost) means
// qubit i survives. Output dimension 2^(popcount).
void partial_trace(const c64* rho, std::size_t n_qubits, std::uint32_t keep_mask,
                   c64* out);

// Transpose the indices of the masked qubits only.
void partial_transpose(const c64* rho, std::size_t n_qubits,
                       std::uint32_t transpose_mask, c64* out);

// Reorder qubits: new qubit i is old qubit perm[i].
void permute_qubits(const c64* rho, std::size_t n_qubits,
                    const std::vector<int>& perm, c64* out);

// Naive single-thread reference implementations (tests, benchmark baseline).
namespace ref {
void matmul(const c64* a, const c64* b, c64* out, std::size_t dim);
void kron(const c64* a, std::size_t dim_a, const c64* b, std::size_t dim_b, c64* out);
void conjugate_on_targets(const c64* rho, std::size_t n_qubits,
                          const c64* op, const std::vector<int>& targets,
                          c64* out);
void partial_trace(const c64* rho, std::size_t n_qubits, std::uint32_t keep_mask,
                   c64* out);
} // namespace ref

} // namespace qss::kernels
