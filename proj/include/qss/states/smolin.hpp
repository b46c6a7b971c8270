// Constructors for the Bell states, the 4-qubit Smolin state, the recursive
// 2n-qubit family, the circuit-based preparation, and exact joint-outcome
// distributions under same-observable measurement of every qubit.
#pragma once

#include <vector>

#include "qss/ops.hpp"

namespace qss::states {

// n = 1 denotes the two-qubit singlet, n = 2 the 4-qubit Smolin state,
// n >= 3 the recursively mixed 2n-qubit family.
struct SmolinFamilyIndex {
    int n = 1;
    explicit SmolinFamilyIndex(int n_);
    std::size_t qubit_count() const { return static_cast<std::size_t>(2 * n); }
};

std::vector<QubitId> default_labels(std::size_t count);

DensityMatrix bell_state(BellIndex idx, const std::vector<QubitId>& labels = {0, 1});

// Equal mixture of the four same-Bell-state products on (q0,q1) x (q2,q3).
DensityMatrix smolin4(const std::vector<QubitId>& labels = {0, 1, 2, 3});

// rho_2 = |Psi-><Psi-|;
// rho_2n = (1/4) sum_m (U_m rho_{2(n-1)} U_m) (x) (U_m rho_2 U_m),
// with U_m = sigma_m on the last qubit of its factor.
DensityMatrix generalized_smolin(SmolinFamilyIndex idx,
                                 std::size_t qubit_cap = kDefaultQubitCap,
                                 const std::vector<QubitId>& labels = {});

// Circuit preparation: |++> ancillas control sigma_z onto qubits 0,2 and
// sigma_x onto qubits 1,3 of |Phi+> (x) |Phi+>; ancillas traced out.
DensityMatrix smolin_via_circuit(const std::vector<QubitId>& labels = {0, 1, 2, 3});

// The full 6-qubit block unitary of the preparation circuit, ancillas first.
// Built as an explicit projector sum, independently of the gate sequence
// smolin_via_circuit applies.
ComplexMatrix smolin_circuit_unitary();

// Exact outcome probabilities when every qubit is measured with `observable`.
// Tuples are indexed with the state's first qubit as the most significant bit.
struct JointOutcomeDistribution {
    PauliObservable observable;
    std::vector<double> probability;  // size 2^q, tiny negatives clipped to 0

    double total_mass() const;
    double parity_mass(int parity) const;  // mass on tuples with XOR == parity
    double even_parity_mass() const { return parity_mass(0); }
};

JointOutcomeDistribution joint_distribution(const DensityMatrix& state,
                                            PauliObservable obs);

} // namespace qss::states
