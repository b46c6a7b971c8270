#include <doctest.h>

#include "qss/kernels.hpp"
#include "qss/pauli.hpp"
#include "qss/rng.hpp"
#include "qss/states/smolin.hpp"

#include "test_helpers.hpp"

using namespace qss;

namespace {

std::vector<c64> random_buffer(std::size_t count, Rng& rng) {
    std::vector<c64> out(count);
    for (auto& v : out) v = c64{rng.uniform() - 0.5, rng.uniform() - 0.5};
    return out;
}

double max_diff(const std::vector<c64>& a, const std::vector<c64>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

TEST_CASE("matmul matches the serial reference") {
    Rng rng(101);
    for (std::size_t dim : {2u, 8u, 33u, 130u}) {
        const auto a = random_buffer(dim * dim, rng);
        const auto b = random_buffer(dim * dim, rng);
        std::vector<c64> got(dim * dim), want(dim * dim);
        kernels::matmul(a.data(), b.data(), got.data(), dim);
        kernels::ref::matmul(a.data(), b.data(), want.data(), dim);
        CHECK(max_diff(got, want) < 1e-12);
    }
}

TEST_CASE("kron matches the serial reference") {
    Rng rng(102);
    for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 4},
                          {4, 4}, {8, 16}, {16, 16}}) {
        const auto a = random_buffer(da * da, rng);
        const auto b = random_buffer(db * db, rng);
        std::vector<c64> got(da * da * db * db), want(got.size());
        kernels::kron(a.data(), da, b.data(), db, got.data());
        kernels::ref::kron(a.data(), da, b.data(), db, want.data());
        CHECK(max_diff(got, want) < 1e-13);
    }
}

TEST_CASE("targeted conjugation matches the explicit full-space product") {
    Rng rng(103);
    for (std::size_t nq : {2u, 4u, 6u}) {
        const std::size_t dim = std::size_t{1} << nq;
        const auto rho = random_buffer(dim * dim, rng);

        // one- and two-qubit operators on assorted positions, in both orders
        const std::vector<std::vector<int>> target_sets = nq >= 4
            ? std::vector<std::vector<int>>{{0}, {static_cast<int>(nq) - 1}, {1, 2}, {2, 1},
                                            {0, static_cast<int>(nq) - 1}}
            : std::vector<std::vector<int>>{{0}, {1}, {0, 1}, {1, 0}};
        for (const auto& targets : target_sets) {
            const std::size_t k = std::size_t{1} << targets.size();
            const auto op = random_buffer(k * k, rng);
            std::vector<c64> got(dim * dim), want(dim * dim);
            kernels::conjugate_on_targets(rho.data(), nq, op.data(), targets, got.data());
            kernels::ref::conjugate_on_targets(rho.data(), nq, op.data(), targets, want.data());
            CHECK(max_diff(got, want) < 1e-11);
        }
    }
}

TEST_CASE("partial trace matches the serial reference") {
    Rng rng(104);
    for (std::size_t nq : {2u, 4u, 6u}) {
        const std::size_t dim = std::size_t{1} << nq;
        const auto rho = random_buffer(dim * dim, rng);
        for (std::uint32_t keep = 1; keep < (1u << nq) - 1; keep += 3) {
            const std::size_t out_dim = std::size_t{1} << std::popcount(keep);
            std::vector<c64> got(out_dim * out_dim), want(out_dim * out_dim);
            kernels::partial_trace(rho.data(), nq, keep, got.data());
            kernels::ref::partial_trace(rho.data(), nq, keep, want.data());
            CHECK(max_diff(got, want) < 1e-12);
        }
    }
}

TEST_CASE("partial transpose twice is the identity") {
    Rng rng(105);
    const std::size_t nq = 4, dim = 16;
    const auto rho = random_buffer(dim * dim, rng);
    for (std::uint32_t mask : {0u, 1u, 5u, 15u}) {
        std::vector<c64> once(dim * dim), twice(dim * dim);
        kernels::partial_transpose(rho.data(), nq, mask, once.data());
        kernels::partial_transpose(once.data(), nq, mask, twice.data());
        CHECK(max_diff(twice, rho) == 0.0);
    }
}

TEST_CASE("qubit permutation composes and inverts") {
    Rng rng(106);
    const std::size_t nq = 3, dim = 8;
    const auto rho = random_buffer(dim * dim, rng);
    const std::vector<int> perm{2, 0, 1};
    const std::vector<int> inverse{1, 2, 0};
    std::vector<c64> fwd(dim * dim), back(dim * dim);
    kernels::permute_qubits(rho.data(), nq, perm, fwd.data());
    kernels::permute_qubits(fwd.data(), nq, inverse, back.data());
    CHECK(max_diff(back, rho) == 0.0);
}

TEST_CASE("built-in gates are unitary to 1e-12") {
    const auto checks = {
        pauli_matrix(PauliOp::X), pauli_matrix(PauliOp::Y), pauli_matrix(PauliOp::Z),
        hadamard(), phase_s(), controlled_x(), controlled_z(),
        states::smolin_circuit_unitary(),
    };
    for (const ComplexMatrix& u : checks) CHECK(u.unitarity_defect() <= 1e-12);
}
