// Operations on density matrices: composition, evolution, reduction,
// measurement and distance diagnostics.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qss/density_matrix.hpp"
#include "qss/hermitian_eigen.hpp"
#include "qss/pauli.hpp"
#include "qss/rng.hpp"

namespace qss {

// Kronecker composition. Label sets must be disjoint; the combined qubit
// count must not exceed `qubit_cap`.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b,
                             std::size_t qubit_cap = kDefaultQubitCap);

// rho -> U rho U^dagger, with u acting on `targets` (in that qubit order).
// u must be unitary within kValidationTol.
DensityMatrix apply_unitary(const DensityMatrix& state, const ComplexMatrix& u,
                            const std::vector<QubitId>& targets);

// Reorder so the state's labels match new_order (a permutation of them).
DensityMatrix permute_qubits(const DensityMatrix& state,
                             const std::vector<QubitId>& new_order);

// Trace out `discard`; must be a proper subset of the labels.
DensityMatrix partial_trace(const DensityMatrix& state,
                            const std::vector<QubitId>& discard);

// Transpose on the subset's indices. The result is Hermitian with unit trace
// but may fail positivity, hence a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& state,
                                const std::vector<QubitId>& subset);

// (1/2) Sum |eig(a - b)|. Requires identical label sets; qubit order may
// differ (b is permuted into a's order first).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

struct PauliBranch {
    double probability;
    DensityMatrix post_state;
};

// Deterministic form of measure_pauli: both branch probabilities and both
// renormalized post-states (branch [b] is outcome bit b). A branch with zero
// probability carries the input state unchanged as a placeholder.
std::array<PauliBranch, 2> pauli_outcome_distribution(const DensityMatrix& state,
                                                      QubitId qubit,
                                                      PauliObservable obs);

std::pair<MeasurementOutcome, DensityMatrix> measure_pauli(const DensityMatrix& state,
                                                           QubitId qubit,
                                                           PauliObservable obs,
                                                           Rng& rng);

struct BellBranch {
    double probability;
    DensityMatrix post_state;
};

// All four Bell branches of a joint measurement on (q1, q2); index order
// follows BellIndex.
std::array<BellBranch, 4> bell_outcome_distribution(const DensityMatrix& state,
                                                    QubitId q1, QubitId q2);

std::pair<BellIndex, DensityMatrix> measure_bell(const DensityMatrix& state,
                                                 QubitId q1, QubitId q2, Rng& rng);

} // namespace qss
