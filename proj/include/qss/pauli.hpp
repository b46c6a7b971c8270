// Pauli observables, Bell states and the small gate set used throughout.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qss/complex_matrix.hpp"

namespace qss {

// Measurement-eligible observables. The identity is representable only via
// PauliOp (used internally by the generalized-Smolin recursion) and is
// rejected by every measurement entry point.
enum class PauliObservable : std::uint8_t { X, Y, Z };

enum class PauliOp : std::uint8_t { I, X, Y, Z };

enum class BellIndex : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<PauliObservable, 3> kAllObservables{
    PauliObservable::X, PauliObservable::Y, PauliObservable::Z};

inline constexpr std::array<BellIndex, 4> kAllBellIndices{
    BellIndex::PhiPlus, BellIndex::PhiMinus, BellIndex::PsiPlus, BellIndex::PsiMinus};

// Outcome of a single projective measurement. Convention: eigenvalue +1 maps
// to bit 0, eigenvalue -1 to bit 1, so "product of eigenvalues = +1" is the
// same statement as "XOR of bits = 0".
struct MeasurementOutcome {
    int bit = 0;
    int eigenvalue() const { return bit == 0 ? +1 : -1; }
};

ComplexMatrix pauli_matrix(PauliOp op);
ComplexMatrix pauli_matrix(PauliObservable obs);

ComplexMatrix hadamard();
ComplexMatrix phase_s();

// 4x4 two-qubit gates, first qubit is the control.
ComplexMatrix controlled_x();
ComplexMatrix controlled_z();

// Basis-change unitary R with R|b> = |v_b>, where |v_0>, |v_1> are the +1/-1
// eigenvectors of the observable. Z -> I, X -> H, Y -> S*H.
ComplexMatrix observable_basis_change(PauliObservable obs);

// Unit-norm two-qubit state vector, amplitudes ordered |00>,|01>,|10>,|11>.
// Phi+- = (|00> +- |11>)/sqrt(2), Psi+- = (|01> +- |10>)/sqrt(2).
std::array<c64, 4> bell_vector(BellIndex idx);

// Parity bit p such that measuring the same observable on both halves of the
// Bell state yields bits with b1 XOR b2 = p (deterministically).
int bell_pair_parity(BellIndex idx, PauliObservable obs);

const char* to_string(PauliObservable obs);
const char* to_string(BellIndex idx);
char observable_char(PauliObservable obs);

} // namespace qss
