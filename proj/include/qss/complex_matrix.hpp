// Square complex matrix, row-major. Carrier for all operators in the toolkit.
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qss/kernels.hpp"

namespace qss {

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), a_(dim * dim, c64{0.0, 0.0}) {}
    ComplexMatrix(std::size_t dim, std::vector<c64> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const c64* data() const { return a_.data(); }
    c64* data() { return a_.data(); }
    c64& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const c64& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    c64 trace() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(double s);

    bool all_finite() const;
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& rhs) const;
    double hermiticity_defect() const;       // max |a_ij - conj(a_ji)|
    double unitarity_defect() const;         // max |(A A^dag - I)_ij|
    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }
    bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

    // Outer product |v><v| of a (not necessarily normalized) column vector.
    static ComplexMatrix projector(const std::vector<c64>& v);

private:
    std::size_t dim_ = 0;
    std::vector<c64> a_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qss
