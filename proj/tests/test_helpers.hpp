// Shared helpers for the unit tests.
#pragma once

#include <vector>

#include "qss/density_matrix.hpp"
#include "qss/ops.hpp"
#include "qss/rng.hpp"

namespace qss::test {

inline std::vector<QubitId> qids(std::initializer_list<std::uint32_t> ids) {
    std::vector<QubitId> out;
    for (auto v : ids) out.push_back(QubitId{v});
    return out;
}

// Random density matrix: normalized mixture of a few random pure states.
inline DensityMatrix random_density(const std::vector<QubitId>& labels, Rng& rng,
                                    int rank = 3) {
    const std::size_t dim = std::size_t{1} << labels.size();
    ComplexMatrix m(dim);
    for (int r = 0; r < rank; ++r) {
        std::vector<c64> v(dim);
        double norm = 0.0;
        for (auto& x : v) {
            x = c64{rng.uniform() - 0.5, rng.uniform() - 0.5};
            norm += std::norm(x);
        }
        const double w = rng.uniform() + 0.1;
        for (auto& x : v) x *= std::sqrt(w / norm);
        ComplexMatrix p = ComplexMatrix::projector(v);
        m += p;
    }
    const double tr = m.trace().real();
    m *= 1.0 / tr;
    return DensityMatrix(std::move(m), labels);
}

// Independent trace routine (plain loop over the raw buffer).
inline double trace_oracle(const ComplexMatrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) t += m.at(i, i).real();
    return t;
}

} // namespace qss::test
