#include "qss/ops.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qss/errors.hpp"
#include "qss/kernels.hpp"

namespace qss {

namespace {

// Below this, a branch is treated as impossible rather than renormalized.
constexpr double kBranchEps = 1e-12;

std::vector<int> target_positions(const DensityMatrix& state,
                                  const std::vector<QubitId>& targets) {
    std::set<QubitId> seen;
    std::vector<int> pos;
    pos.reserve(targets.size());
    for (QubitId t : targets) {
        if (!seen.insert(t).second)
            throw LabelError("duplicate target label " + std::to_string(t.value));
        pos.push_back(static_cast<int>(state.index_of(t)));
    }
    return pos;
}

DensityMatrix conjugate_and_wrap(const DensityMatrix& state, const ComplexMatrix& op,
                                 const std::vector<int>& positions) {
    ComplexMatrix out(state.dim());
    kernels::conjugate_on_targets(state.matrix().data(), state.qubit_count(),
                                  op.data(), positions, out.data());
    return DensityMatrix(std::move(out), state.labels());
}

// Unnormalized projection P rho P together with its weight Tr(P rho P).
std::pair<double, ComplexMatrix> project(const DensityMatrix& state,
                                         const ComplexMatrix& projector,
                                         const std::vector<int>& positions) {
    ComplexMatrix out(state.dim());
    kernels::conjugate_on_targets(state.matrix().data(), state.qubit_count(),
                                  projector.data(), positions, out.data());
    return {out.trace().real(), std::move(out)};
}

DensityMatrix renormalize(ComplexMatrix m, double weight,
                          const std::vector<QubitId>& labels) {
    m *= 1.0 / weight;
    return DensityMatrix(std::move(m), labels);
}

} // namespace

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b,
                             std::size_t qubit_cap) {
    for (QubitId l : b.labels())
        if (a.has_label(l))
            throw LabelError("tensor_product: overlapping label " + std::to_string(l.value));
    const std::size_t total = a.qubit_count() + b.qubit_count();
    if (total > qubit_cap)
        throw CapacityError("tensor_product: " + std::to_string(total) +
                            " qubits exceed cap " + std::to_string(qubit_cap));
    ComplexMatrix out(a.dim() * b.dim());
    kernels::kron(a.matrix().data(), a.dim(), b.matrix().data(), b.dim(), out.data());
    std::vector<QubitId> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return DensityMatrix(std::move(out), std::move(labels));
}

DensityMatrix apply_unitary(const DensityMatrix& state, const ComplexMatrix& u,
                            const std::vector<QubitId>& targets) {
    if (u.dim() != (std::size_t{1} << targets.size()))
        throw ValidationError("apply_unitary: operator dimension does not match target count");
    if (!u.is_unitary(kValidationTol))
        throw ValidationError("apply_unitary: operator is not unitary within tolerance");
    return conjugate_and_wrap(state, u, target_positions(state, targets));
}

DensityMatrix permute_qubits(const DensityMatrix& state,
                             const std::vector<QubitId>& new_order) {
    if (new_order.size() != state.qubit_count())
        throw LabelError("permute_qubits: new order has wrong length");
    std::vector<int> perm = target_positions(state, new_order);
    ComplexMatrix out(state.dim());
    kernels::permute_qubits(state.matrix().data(), state.qubit_count(), perm, out.data());
    return DensityMatrix(std::move(out), new_order);
}

DensityMatrix partial_trace(const DensityMatrix& state,
                            const std::vector<QubitId>& discard) {
    std::set<QubitId> drop(discard.begin(), discard.end());
    for (QubitId q : drop) (void)state.index_of(q);
    if (drop.size() >= state.qubit_count())
        throw DomainError("partial_trace: cannot discard every qubit");
    std::uint32_t keep_mask = 0;
    std::vector<QubitId> kept;
    for (std::size_t i = 0; i < state.qubit_count(); ++i) {
        if (!drop.count(state.labels()[i])) {
            keep_mask |= 1u << i;
            kept.push_back(state.labels()[i]);
        }
    }
    ComplexMatrix out(std::size_t{1} << kept.size());
    kernels::partial_trace(state.matrix().data(), state.qubit_count(), keep_mask, out.data());
    return DensityMatrix(std::move(out), std::move(kept));
}

ComplexMatrix partial_transpose(const DensityMatrix& state,
                                const std::vector<QubitId>& subset) {
    std::uint32_t mask = 0;
    std::set<QubitId> sub(subset.begin(), subset.end());
    for (QubitId q : sub) mask |= 1u << state.index_of(q);
    ComplexMatrix out(state.dim());
    kernels::partial_transpose(state.matrix().data(), state.qubit_count(), mask, out.data());
    return out;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    std::set<QubitId> la(a.labels().begin(), a.labels().end());
    std::set<QubitId> lb(b.labels().begin(), b.labels().end());
    if (la != lb) throw LabelError("trace_distance: label sets differ");
    const DensityMatrix b_aligned =
        (a.labels() == b.labels()) ? b : permute_qubits(b, a.labels());
    ComplexMatrix diff = a.matrix();
    for (std::size_t i = 0; i < diff.dim() * diff.dim(); ++i)
        diff.data()[i] -= b_aligned.matrix().data()[i];
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(diff)) sum += std::abs(ev);
    return 0.5 * sum;
}

std::array<PauliBranch, 2> pauli_outcome_distribution(const DensityMatrix& state,
                                                      QubitId qubit,
                                                      PauliObservable obs) {
    const std::vector<int> pos = target_positions(state, {qubit});
    const ComplexMatrix r = observable_basis_change(obs);

    std::array<PauliBranch, 2> branches{PauliBranch{0.0, state}, PauliBranch{0.0, state}};
    for (int bit = 0; bit < 2; ++bit) {
        // projector onto the eigenvector R|bit>
        std::vector<c64> v{r.at(0, static_cast<std::size_t>(bit)),
                           r.at(1, static_cast<std::size_t>(bit))};
        auto [w, projected] = project(state, ComplexMatrix::projector(v), pos);
        branches[bit].probability = std::max(w, 0.0);
        if (w > kBranchEps)
            branches[bit].post_state = renormalize(std::move(projected), w, state.labels());
    }
    return branches;
}

std::pair<MeasurementOutcome, DensityMatrix> measure_pauli(const DensityMatrix& state,
                                                           QubitId qubit,
                                                           PauliObservable obs,
                                                           Rng& rng) {
    auto branches = pauli_outcome_distribution(state, qubit, obs);
    const int bit = (rng.uniform() < branches[0].probability) ? 0 : 1;
    // guard against sampling a numerically impossible branch
    const int pick = (branches[bit].probability > kBranchEps) ? bit : 1 - bit;
    return {MeasurementOutcome{pick}, std::move(branches[pick].post_state)};
}

std::array<BellBranch, 4> bell_outcome_distribution(const DensityMatrix& state,
                                                    QubitId q1, QubitId q2) {
    if (q1 == q2) throw LabelError("bell measurement needs two distinct qubits");
    const std::vector<int> pos = target_positions(state, {q1, q2});

    std::array<BellBranch, 4> branches{BellBranch{0.0, state}, BellBranch{0.0, state},
                                       BellBranch{0.0, state}, BellBranch{0.0, state}};
    for (std::size_t i = 0; i < kAllBellIndices.size(); ++i) {
        const auto vec = bell_vector(kAllBellIndices[i]);
        const ComplexMatrix proj =
            ComplexMatrix::projector({vec[0], vec[1], vec[2], vec[3]});
        auto [w, projected] = project(state, proj, pos);
        branches[i].probability = std::max(w, 0.0);
        if (w > kBranchEps)
            branches[i].post_state = renormalize(std::move(projected), w, state.labels());
    }
    return branches;
}

std::pair<BellIndex, DensityMatrix> measure_bell(const DensityMatrix& state,
                                                 QubitId q1, QubitId q2, Rng& rng) {
    auto branches = bell_outcome_distribution(state, q1, q2);
    double r = rng.uniform();
    std::size_t pick = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].probability > best) {
            best = branches[i].probability;
            pick = i;  // fallback if rounding exhausts the cumulative sum
        }
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].probability <= kBranchEps) continue;
        if (r < branches[i].probability) {
            pick = i;
            break;
        }
        r -= branches[i].probability;
    }
    return {kAllBellIndices[pick], std::move(branches[pick].post_state)};
}

} // namespace qss
