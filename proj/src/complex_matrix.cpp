#include "qss/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<c64> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim * dim)
        throw ValidationError("ComplexMatrix: entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c64{1.0, 0.0};
    return m;
}

c64 ComplexMatrix::trace() const {
    c64 t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            out.at(c, r) = std::conj(at(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw ValidationError("ComplexMatrix: dimension mismatch in product");
    ComplexMatrix out(dim_);
    kernels::matmul(data(), rhs.data(), out.data(), dim_);
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw ValidationError("ComplexMatrix: dimension mismatch in sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](const c64& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw ValidationError("ComplexMatrix: dimension mismatch in diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
    return m;
}

double ComplexMatrix::unitarity_defect() const {
    ComplexMatrix prod = *this * adjoint();
    for (std::size_t i = 0; i < dim_; ++i) prod.at(i, i) -= c64{1.0, 0.0};
    return prod.max_abs();
}

ComplexMatrix ComplexMatrix::projector(const std::vector<c64>& v) {
    ComplexMatrix out(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            out.at(r, c) = v[r] * std::conj(v[c]);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim() * b.dim());
    kernels::kron(a.data(), a.dim(), b.data(), b.dim(), out.data());
    return out;
}

} // namespace qss
