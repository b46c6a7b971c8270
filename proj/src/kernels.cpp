#include "qss/kernels.hpp"

#include <cassert>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qss::kernels {

namespace {

// Below this dimension the OpenMP fork/join overhead dominates.
constexpr std::size_t kParallelMinDim = 128;

bool go_parallel(std::size_t dim) {
#if defined(_OPENMP)
    return dim >= kParallelMinDim && !omp_in_parallel();
#else
    (void)dim;
    return false;
#endif
}

// Bit position (from LSB) of qubit q in an n-qubit index; qubit 0 is the MSB.
inline int bit_pos(std::size_t n_qubits, int qubit) {
    return static_cast<int>(n_qubits) - 1 - qubit;
}

struct TargetMap {
    std::size_t op_dim = 1;          // 2^k
    std::uint64_t target_mask = 0;   // index-space mask of the target bits
    std::vector<std::uint64_t> scatter; // operator sub-index -> index-space bits

    TargetMap(std::size_t n_qubits, const std::vector<int>& targets) {
        const std::size_t k = targets.size();
        op_dim = std::size_t{1} << k;
        scatter.assign(op_dim, 0);
        for (std::size_t s = 0; s < op_dim; ++s) {
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (s >> (k - 1 - j) & 1)
                    bits |= std::uint64_t{1} << bit_pos(n_qubits, targets[j]);
            }
            scatter[s] = bits;
        }
        for (int t : targets)
            target_mask |= std::uint64_t{1} << bit_pos(n_qubits, t);
    }

    std::size_t op_index(std::uint64_t full_index, const std::vector<int>& targets,
                         std::size_t n_qubits) const {
        std::size_t s = 0;
        const std::size_t k = targets.size();
        for (std::size_t j = 0; j < k; ++j)
            s |= ((full_index >> bit_pos(n_qubits, targets[j])) & 1) << (k - 1 - j);
        return s;
    }
};

} // namespace

void matmul(const c64* a, const c64* b, c64* out, std::size_t dim) {
    const bool par = go_parallel(dim);
#pragma omp parallel for if (par) schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(dim); ++i) {
        c64* row = out + i * dim;
        for (std::size_t j = 0; j < dim; ++j) row[j] = c64{0.0, 0.0};
        for (std::size_t k = 0; k < dim; ++k) {
            const c64 aik = a[i * dim + k];
            if (aik == c64{0.0, 0.0}) continue;
            const c64* brow = b + k * dim;
            for (std::size_t j = 0; j < dim; ++j) row[j] += aik * brow[j];
        }
    }
}

void kron(const c64* a, std::size_t dim_a, const c64* b, std::size_t dim_b, c64* out) {
    const std::size_t dim = dim_a * dim_b;
    const bool par = go_parallel(dim);
#pragma omp parallel for if (par) schedule(static) collapse(2)
    for (std::ptrdiff_t ia = 0; ia < static_cast<std::ptrdiff_t>(dim_a); ++ia) {
        for (std::ptrdiff_t ib = 0; ib < static_cast<std::ptrdiff_t>(dim_b); ++ib) {
            const std::size_t r = ia * dim_b + ib;
            for (std::size_t ja = 0; ja < dim_a; ++ja) {
                const c64 av = a[ia * dim_a + ja];
                for (std::size_t jb = 0; jb < dim_b; ++jb)
                    out[r * dim + ja * dim_b + jb] = av * b[ib * dim_b + jb];
            }
        }
    }
}

void conjugate_on_targets(const c64* rho, std::size_t n_qubits,
                          const c64* op, const std::vector<int>& targets,
                          c64* out) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const TargetMap map(n_qubits, targets);
    const std::size_t K = map.op_dim;

    std::vector<std::size_t> op_idx(dim);
    std::vector<std::uint64_t> base(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        op_idx[r] = map.op_index(r, targets, n_qubits);
        base[r] = r & ~map.target_mask;
    }

    std::vector<c64> tmp(dim * dim);
    const bool par = go_parallel(dim);

    // tmp = op * rho on the target axes
#pragma omp parallel for if (par) schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(dim); ++r) {
        const c64* op_row = op + op_idx[r] * K;
        c64* trow = tmp.data() + r * dim;
        for (std::size_t c = 0; c < dim; ++c) trow[c] = c64{0.0, 0.0};
        for (std::size_t s = 0; s < K; ++s) {
            const c64 w = op_row[s];
            if (w == c64{0.0, 0.0}) continue;
            const c64* src = rho + (base[r] | map.scatter[s]) * dim;
            for (std::size_t c = 0; c < dim; ++c) trow[c] += w * src[c];
        }
    }

    // out = tmp * op^dagger on the target axes
#pragma omp parallel for if (par) schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(dim); ++r) {
        const c64* trow = tmp.data() + r * dim;
        c64* orow = out + r * dim;
        for (std::size_t c = 0; c < dim; ++c) {
            c64 acc{0.0, 0.0};
            const c64* op_row = op + op_idx[c] * K;
            for (std::size_t s = 0; s < K; ++s) {
                const c64 w = op_row[s];
                if (w == c64{0.0, 0.0}) continue;
                acc += trow[base[c] | map.scatter[s]] * std::conj(w);
            }
            orow[c] = acc;
        }
    }
}

void partial_trace(const c64* rho, std::size_t n_qubits, std::uint32_t keep_mask,
                   c64* out) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<int> kept, dropped;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (keep_mask >> q & 1) kept.push_back(static_cast<int>(q));
        else dropped.push_back(static_cast<int>(q));
    }
    const std::size_t out_dim = std::size_t{1} << kept.size();
    const std::size_t drop_dim = std::size_t{1} << dropped.size();

    // Scatter tables: output / environment sub-index -> full index bits.
    std::vector<std::uint64_t> expand_keep(out_dim, 0), expand_drop(drop_dim, 0);
    for (std::size_t i = 0; i < out_dim; ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (i >> (kept.size() - 1 - j) & 1)
                expand_keep[i] |= std::uint64_t{1} << bit_pos(n_qubits, kept[j]);
    for (std::size_t e = 0; e < drop_dim; ++e)
        for (std::size_t j = 0; j < dropped.size(); ++j)
            if (e >> (dropped.size() - 1 - j) & 1)
                expand_drop[e] |= std::uint64_t{1} << bit_pos(n_qubits, dropped[j]);

    const bool par = go_parallel(dim);
#pragma omp parallel for if (par) schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(out_dim); ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            c64 acc{0.0, 0.0};
            for (std::size_t e = 0; e < drop_dim; ++e)
                acc += rho[(expand_keep[r] | expand_drop[e]) * dim +
                           (expand_keep[c] | expand_drop[e])];
            out[r * out_dim + c] = acc;
        }
    }
}

void partial_transpose(const c64* rho, std::size_t n_qubits,
                       std::uint32_t transpose_mask, c64* out) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < n_qubits; ++q)
        if (transpose_mask >> q & 1) m |= std::uint64_t{1} << bit_pos(n_qubits, static_cast<int>(q));

    const bool par = go_parallel(dim);
#pragma omp parallel for if (par) schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(dim); ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const std::uint64_t rr = (r & ~m) | (c & m);
            const std::uint64_t cc = (c & ~m) | (r & m);
            out[rr * dim + cc] = rho[r * dim + c];
        }
    }
}

void permute_qubits(const c64* rho, std::size_t n_qubits,
                    const std::vector<int>& perm, c64* out) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<std::uint64_t> new_index(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < n_qubits; ++i) {
            const std::uint64_t bit = r >> bit_pos(n_qubits, perm[i]) & 1;
            v |= bit << bit_pos(n_qubits, static_cast<int>(i));
        }
        new_index[r] = v;
    }
    const bool par = go_parallel(dim);
#pragma omp parallel for if (par) schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(dim); ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out[new_index[r] * dim + new_index[c]] = rho[r * dim + c];
}

namespace ref {

void matmul(const c64* a, const c64* b, c64* out, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            c64 acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim; ++k) acc += a[i * dim + k] * b[k * dim + j];
            out[i * dim + j] = acc;
        }
}

void kron(const c64* a, std::size_t dim_a, const c64* b, std::size_t dim_b, c64* out) {
    const std::size_t dim = dim_a * dim_b;
    for (std::size_t ia = 0; ia < dim_a; ++ia)
        for (std::size_t ja = 0; ja < dim_a; ++ja)
            for (std::size_t ib = 0; ib < dim_b; ++ib)
                for (std::size_t jb = 0; jb < dim_b; ++jb)
                    out[(ia * dim_b + ib) * dim + ja * dim_b + jb] =
                        a[ia * dim_a + ja] * b[ib * dim_b + jb];
}

// Builds the full-space operator explicitly and does two dense products.
// Slow but structurally independent of the strided fast path.
void conjugate_on_targets(const c64* rho, std::size_t n_qubits,
                          const c64* op, const std::vector<int>& targets,
                          c64* out) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const TargetMap map(n_qubits, targets);
    std::vector<c64> full(dim * dim, c64{0.0, 0.0});
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if ((r & ~map.target_mask) == (c & ~map.target_mask))
                full[r * dim + c] = op[map.op_index(r, targets, n_qubits) * map.op_dim +
                                       map.op_index(c, targets, n_qubits)];
    std::vector<c64> tmp(dim * dim), full_dag(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            full_dag[r * dim + c] = std::conj(full[c * dim + r]);
    ref::matmul(full.data(), rho, tmp.data(), dim);
    ref::matmul(tmp.data(), full_dag.data(), out, dim);
}

void partial_trace(const c64* rho, std::size_t n_qubits, std::uint32_t keep_mask,
                   c64* out) {
    std::vector<int> kept;
    for (std::size_t q = 0; q < n_qubits; ++q)
        if (keep_mask >> q & 1) kept.push_back(static_cast<int>(q));
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t out_dim = std::size_t{1} << kept.size();
    for (std::size_t i = 0; i < out_dim * out_dim; ++i) out[i] = c64{0.0, 0.0};
    for (std::size_t r = 0; r < dim; ++r) {
        std::size_t ro = 0;
        for (std::size_t j = 0; j < kept.size(); ++j)
            ro |= (r >> bit_pos(n_qubits, kept[j]) & 1) << (kept.size() - 1 - j);
        for (std::size_t c = 0; c < dim; ++c) {
            // environment bits must agree on row and column
            bool same = true;
            for (std::size_t q = 0; q < n_qubits && same; ++q) {
                if (keep_mask >> q & 1) continue;
                same = ((r >> bit_pos(n_qubits, static_cast<int>(q))) & 1) ==
                       ((c >> bit_pos(n_qubits, static_cast<int>(q))) & 1);
            }
            if (!same) continue;
            std::size_t co = 0;
            for (std::size_t j = 0; j < kept.size(); ++j)
                co |= (c >> bit_pos(n_qubits, kept[j]) & 1) << (kept.size() - 1 - j);
            out[ro * out_dim + co] += rho[r * dim + c];
        }
    }
}

} // namespace ref

} // namespace qss::kernels
