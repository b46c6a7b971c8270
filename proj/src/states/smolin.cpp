#include "qss/states/smolin.hpp"

#include <bit>
#include <cmath>

#include "qss/errors.hpp"
#include "qss/kernels.hpp"

namespace qss::states {

namespace {

const c64 kHalf{0.5, 0.0};

std::vector<QubitId> labels_or_default(const std::vector<QubitId>& labels,
                                       std::size_t count) {
    if (labels.empty()) return default_labels(count);
    if (labels.size() != count)
        throw LabelError("expected " + std::to_string(count) + " qubit labels");
    return labels;
}

// sigma_m conjugation of the last qubit of a bare matrix block.
ComplexMatrix conjugate_last_qubit(const ComplexMatrix& rho, std::size_t n_qubits,
                                   PauliOp m) {
    if (m == PauliOp::I) return rho;
    ComplexMatrix out(rho.dim());
    const std::vector<int> target{static_cast<int>(n_qubits) - 1};
    kernels::conjugate_on_targets(rho.data(), n_qubits, pauli_matrix(m).data(), target,
                                  out.data());
    return out;
}

} // namespace

SmolinFamilyIndex::SmolinFamilyIndex(int n_) : n(n_) {
    if (n < 1) throw ValidationError("SmolinFamilyIndex: n must be >= 1");
}

std::vector<QubitId> default_labels(std::size_t count) {
    std::vector<QubitId> labels(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = QubitId{static_cast<std::uint32_t>(i)};
    return labels;
}

DensityMatrix bell_state(BellIndex idx, const std::vector<QubitId>& labels) {
    const auto v = bell_vector(idx);
    ComplexMatrix m = ComplexMatrix::projector({v[0], v[1], v[2], v[3]});
    return DensityMatrix(std::move(m), labels_or_default(labels, 2));
}

DensityMatrix smolin4(const std::vector<QubitId>& labels) {
    ComplexMatrix sum(16);
    for (BellIndex idx : kAllBellIndices) {
        const auto v = bell_vector(idx);
        const ComplexMatrix pair = ComplexMatrix::projector({v[0], v[1], v[2], v[3]});
        ComplexMatrix term(16);
        kernels::kron(pair.data(), 4, pair.data(), 4, term.data());
        sum += term;
    }
    sum *= 0.25;
    return DensityMatrix(std::move(sum), labels_or_default(labels, 4));
}

DensityMatrix generalized_smolin(SmolinFamilyIndex idx, std::size_t qubit_cap,
                                 const std::vector<QubitId>& labels) {
    const std::size_t qubits = idx.qubit_count();
    if (qubits > qubit_cap)
        throw CapacityError("generalized_smolin: " + std::to_string(qubits) +
                            " qubits exceed cap " + std::to_string(qubit_cap));
    const auto out_labels = labels_or_default(labels, qubits);

    const auto psv = bell_vector(BellIndex::PsiMinus);
    const ComplexMatrix rho2 = ComplexMatrix::projector({psv[0], psv[1], psv[2], psv[3]});

    ComplexMatrix rho = rho2;
    std::size_t block_qubits = 2;
    constexpr std::array<PauliOp, 4> kMix{PauliOp::I, PauliOp::X, PauliOp::Y, PauliOp::Z};
    for (int level = 2; level <= idx.n; ++level) {
        const std::size_t new_dim = rho.dim() * 4;
        ComplexMatrix next(new_dim);
        for (PauliOp m : kMix) {
            const ComplexMatrix left = conjugate_last_qubit(rho, block_qubits, m);
            const ComplexMatrix right = conjugate_last_qubit(rho2, 2, m);
            ComplexMatrix term(new_dim);
            kernels::kron(left.data(), left.dim(), right.data(), right.dim(), term.data());
            next += term;
        }
        next *= 0.25;
        rho = std::move(next);
        block_qubits += 2;
    }
    return DensityMatrix(std::move(rho), out_labels);
}

ComplexMatrix smolin_circuit_unitary() {
    // sum over ancilla basis |ab><ab| (x) (controlled Pauli strings on ABCD)
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix sx = pauli_matrix(PauliOp::X);
    const ComplexMatrix sz = pauli_matrix(PauliOp::Z);

    auto string4 = [&](const ComplexMatrix& a, const ComplexMatrix& b,
                       const ComplexMatrix& c, const ComplexMatrix& d) {
        return kron(kron(a, b), kron(c, d));
    };

    ComplexMatrix u(64);
    const std::array<ComplexMatrix, 4> blocks{
        string4(id2, id2, id2, id2),  // |00>
        string4(sz, id2, sz, id2),    // |01>: sigma_z on A and C
        string4(id2, sx, id2, sx),    // |10>: sigma_x on B and D
        string4(sz, sx, sz, sx),      // |11>
    };
    for (std::size_t ab = 0; ab < 4; ++ab) {
        ComplexMatrix anc(4);
        anc.at(ab, ab) = c64{1.0, 0.0};
        u += kron(anc, blocks[ab]);
    }
    return u;
}

DensityMatrix smolin_via_circuit(const std::vector<QubitId>& labels) {
    const auto out_labels = labels_or_default(labels, 4);
    // ancilla labels from the top of the id space so they cannot collide
    const QubitId alpha{0xFFFFFF00u};
    const QubitId beta{0xFFFFFF01u};

    // |+><+| on each ancilla
    ComplexMatrix plus(2);
    plus.at(0, 0) = plus.at(0, 1) = plus.at(1, 0) = plus.at(1, 1) = kHalf;
    const DensityMatrix anc_a(plus, {alpha});
    const DensityMatrix anc_b(plus, {beta});

    DensityMatrix state = tensor_product(
        tensor_product(anc_a, anc_b, kDefaultQubitCap),
        tensor_product(bell_state(BellIndex::PhiPlus, {out_labels[0], out_labels[1]}),
                       bell_state(BellIndex::PhiPlus, {out_labels[2], out_labels[3]}),
                       kDefaultQubitCap),
        kDefaultQubitCap);

    const ComplexMatrix cz = controlled_z();
    const ComplexMatrix cx = controlled_x();
    state = apply_unitary(state, cz, {beta, out_labels[0]});
    state = apply_unitary(state, cz, {beta, out_labels[2]});
    state = apply_unitary(state, cx, {alpha, out_labels[1]});
    state = apply_unitary(state, cx, {alpha, out_labels[3]});

    return partial_trace(state, {alpha, beta});
}

double JointOutcomeDistribution::total_mass() const {
    double s = 0.0;
    for (double p : probability) s += p;
    return s;
}

double JointOutcomeDistribution::parity_mass(int parity) const {
    double s = 0.0;
    for (std::size_t t = 0; t < probability.size(); ++t)
        if ((std::popcount(t) & 1) == parity) s += probability[t];
    return s;
}

JointOutcomeDistribution joint_distribution(const DensityMatrix& state,
                                            PauliObservable obs) {
    // Rotate every qubit into the observable eigenbasis; the diagonal then
    // holds the joint outcome probabilities.
    const ComplexMatrix r_dag = observable_basis_change(obs).adjoint();
    ComplexMatrix rotated = state.matrix();
    ComplexMatrix scratch(state.dim());
    for (std::size_t q = 0; q < state.qubit_count(); ++q) {
        kernels::conjugate_on_targets(rotated.data(), state.qubit_count(), r_dag.data(),
                                      {static_cast<int>(q)}, scratch.data());
        std::swap(rotated, scratch);
    }
    JointOutcomeDistribution dist{obs, std::vector<double>(state.dim(), 0.0)};
    for (std::size_t t = 0; t < state.dim(); ++t) {
        const double p = rotated.at(t, t).real();
        if (p < -1e-12)
            throw ValidationError("joint_distribution: negative probability " +
                                  std::to_string(p));
        dist.probability[t] = std::max(p, 0.0);
    }
    return dist;
}

} // namespace qss::states
