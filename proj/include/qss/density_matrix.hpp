// Density matrix on labeled qubits: Hermitian, unit trace, positive
// semidefinite within the documented tolerances.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qss/complex_matrix.hpp"

namespace qss {

struct QubitId {
    std::uint32_t value = 0;
    constexpr QubitId() = default;
    constexpr QubitId(std::uint32_t v) : value(v) {}  // NOLINT: implicit by design
    auto operator<=>(const QubitId&) const = default;
};

// Largest system a single DensityMatrix may describe, unless a caller asks
// for more. 10 qubits = 1024x1024 entries.
inline constexpr std::size_t kDefaultQubitCap = 10;

// Tolerances: construction-time validation at 1e-10, exact-identity test
// assertions at 1e-12, PSD checks allow eigenvalues down to -1e-9.
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

class DensityMatrix {
public:
    // Validates: dim = 2^labels.size(), finite entries, Hermitian and unit
    // trace within kValidationTol, labels pairwise distinct. Positive
    // semidefiniteness is checked by validate_psd() (it costs a full
    // diagonalization, so it is not run on every construction).
    DensityMatrix(ComplexMatrix matrix, std::vector<QubitId> labels);

    // |bits><bits| on the given labels (bits[i] is the state of labels[i]).
    static DensityMatrix basis_state(const std::vector<int>& bits,
                                     const std::vector<QubitId>& labels);
    static DensityMatrix maximally_mixed(const std::vector<QubitId>& labels);

    std::size_t qubit_count() const { return labels_.size(); }
    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const std::vector<QubitId>& labels() const { return labels_; }

    bool has_label(QubitId q) const;
    std::size_t index_of(QubitId q) const;  // throws LabelError

    double purity() const;  // Tr(rho^2)
    void validate_psd(double tol = kPsdTol) const;

    DensityMatrix with_labels(std::vector<QubitId> new_labels) const;

    // Debug dump: "dim=<d>" then d lines of d comma-separated "re im" pairs,
    // row-major, 17 significant digits.
    std::string debug_dump() const;

private:
    ComplexMatrix m_;
    std::vector<QubitId> labels_;
};

} // namespace qss
