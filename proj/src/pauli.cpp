#include "qss/pauli.hpp"

#include <cmath>

#include "qss/errors.hpp"

namespace qss {

namespace {
const c64 kZero{0.0, 0.0};
const c64 kOne{1.0, 0.0};
const c64 kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

ComplexMatrix pauli_matrix(PauliOp op) {
    ComplexMatrix m(2);
    switch (op) {
        case PauliOp::I: m.at(0, 0) = kOne;  m.at(1, 1) = kOne;  break;
        case PauliOp::X: m.at(0, 1) = kOne;  m.at(1, 0) = kOne;  break;
        case PauliOp::Y: m.at(0, 1) = -kI;   m.at(1, 0) = kI;    break;
        case PauliOp::Z: m.at(0, 0) = kOne;  m.at(1, 1) = -kOne; break;
    }
    return m;
}

ComplexMatrix pauli_matrix(PauliObservable obs) {
    switch (obs) {
        case PauliObservable::X: return pauli_matrix(PauliOp::X);
        case PauliObservable::Y: return pauli_matrix(PauliOp::Y);
        case PauliObservable::Z: return pauli_matrix(PauliOp::Z);
    }
    throw ValidationError("pauli_matrix: bad observable");
}

ComplexMatrix hadamard() {
    ComplexMatrix m(2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = c64{kInvSqrt2, 0.0};
    m.at(1, 1) = c64{-kInvSqrt2, 0.0};
    return m;
}

ComplexMatrix phase_s() {
    ComplexMatrix m(2);
    m.at(0, 0) = kOne;
    m.at(1, 1) = kI;
    return m;
}

ComplexMatrix controlled_x() {
    ComplexMatrix m(4);
    m.at(0, 0) = m.at(1, 1) = kOne;
    m.at(2, 3) = m.at(3, 2) = kOne;
    return m;
}

ComplexMatrix controlled_z() {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m.at(3, 3) = -kOne;
    return m;
}

ComplexMatrix observable_basis_change(PauliObservable obs) {
    switch (obs) {
        case PauliObservable::Z: return ComplexMatrix::identity(2);
        case PauliObservable::X: return hadamard();
        case PauliObservable::Y: return phase_s() * hadamard();
    }
    throw ValidationError("observable_basis_change: bad observable");
}

std::array<c64, 4> bell_vector(BellIndex idx) {
    const c64 a{kInvSqrt2, 0.0};
    switch (idx) {
        case BellIndex::PhiPlus:  return {a, kZero, kZero, a};
        case BellIndex::PhiMinus: return {a, kZero, kZero, -a};
        case BellIndex::PsiPlus:  return {kZero, a, a, kZero};
        case BellIndex::PsiMinus: return {kZero, a, -a, kZero};
    }
    throw ValidationError("bell_vector: bad index");
}

int bell_pair_parity(BellIndex idx, PauliObservable obs) {
    // sign of <obs x obs> on the Bell state; +1 means correlated bits
    int sign = 0;
    switch (idx) {
        case BellIndex::PhiPlus:
            sign = (obs == PauliObservable::Y) ? -1 : +1;
            break;
        case BellIndex::PhiMinus:
            sign = (obs == PauliObservable::X) ? -1 : +1;
            break;
        case BellIndex::PsiPlus:
            sign = (obs == PauliObservable::Z) ? -1 : +1;
            break;
        case BellIndex::PsiMinus:
            sign = -1;
            break;
    }
    return sign > 0 ? 0 : 1;
}

const char* to_string(PauliObservable obs) {
    switch (obs) {
        case PauliObservable::X: return "X";
        case PauliObservable::Y: return "Y";
        case PauliObservable::Z: return "Z";
    }
    return "?";
}

const char* to_string(BellIndex idx) {
    switch (idx) {
        case BellIndex::PhiPlus:  return "Phi+";
        case BellIndex::PhiMinus: return "Phi-";
        case BellIndex::PsiPlus:  return "Psi+";
        case BellIndex::PsiMinus: return "Psi-";
    }
    return "?";
}

char observable_char(PauliObservable obs) { return to_string(obs)[0]; }

} // namespace qss
