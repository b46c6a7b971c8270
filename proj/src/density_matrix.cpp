#include "qss/density_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "qss/errors.hpp"
#include "qss/hermitian_eigen.hpp"

namespace qss {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<QubitId> labels)
    : m_(std::move(matrix)), labels_(std::move(labels)) {
    if (labels_.empty() || !is_power_of_two(m_.dim()) ||
        m_.dim() != (std::size_t{1} << labels_.size()))
        throw ValidationError("DensityMatrix: dimension must be 2^(label count)");
    std::set<QubitId> uniq(labels_.begin(), labels_.end());
    if (uniq.size() != labels_.size())
        throw LabelError("DensityMatrix: duplicate qubit labels");
    if (!m_.all_finite())
        throw ValidationError("DensityMatrix: non-finite entries");
    if (m_.hermiticity_defect() > kValidationTol)
        throw ValidationError("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(m_.trace() - c64{1.0, 0.0}) > kValidationTol)
        throw ValidationError("DensityMatrix: trace differs from 1");
}

DensityMatrix DensityMatrix::basis_state(const std::vector<int>& bits,
                                         const std::vector<QubitId>& labels) {
    if (bits.size() != labels.size())
        throw ValidationError("basis_state: bits/labels length mismatch");
    const std::size_t n = labels.size();
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) index = (index << 1) | (bits[i] & 1);
    ComplexMatrix m(std::size_t{1} << n);
    m.at(index, index) = c64{1.0, 0.0};
    return DensityMatrix(std::move(m), labels);
}

DensityMatrix DensityMatrix::maximally_mixed(const std::vector<QubitId>& labels) {
    const std::size_t dim = std::size_t{1} << labels.size();
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c64{1.0 / static_cast<double>(dim), 0.0};
    return DensityMatrix(std::move(m), labels);
}

bool DensityMatrix::has_label(QubitId q) const {
    for (QubitId l : labels_)
        if (l == q) return true;
    return false;
}

std::size_t DensityMatrix::index_of(QubitId q) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == q) return i;
    throw LabelError("DensityMatrix: unknown qubit label " + std::to_string(q.value));
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double p = 0.0;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d * d; ++i) p += std::norm(m_.data()[i]);
    return p;
}

void DensityMatrix::validate_psd(double tol) const {
    const double lo = min_eigenvalue(m_);
    if (lo < -tol)
        throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::with_labels(std::vector<QubitId> new_labels) const {
    if (new_labels.size() != labels_.size())
        throw LabelError("with_labels: label count mismatch");
    return DensityMatrix(m_, std::move(new_labels));
}

std::string DensityMatrix::debug_dump() const {
    const std::size_t d = dim();
    std::string out = "dim=" + std::to_string(d) + "\n";
    char buf[64];
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const c64 v = m_.at(r, c);
            std::snprintf(buf, sizeof(buf), "%.17g %.17g", v.real(), v.imag());
            out += buf;
            out += (c + 1 < d) ? "," : "\n";
        }
    }
    return out;
}

} // namespace qss
