// Joint-state registry: partitions all live qubit labels into blocks, each
// holding one density matrix. Operations spanning blocks merge them first;
// merges past the qubit cap are refused. Attacks that couple copies are the
// only way blocks grow.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qss/ops.hpp"

namespace qss::protocol {

class SystemRegistry {
public:
    explicit SystemRegistry(int qubit_cap);

    // Registers a new block. Labels must be globally fresh.
    void add_state(DensityMatrix state);

    std::size_t block_count() const;
    bool owns(QubitId q) const;
    const DensityMatrix& block_of(QubitId q) const;

    // Merges the owning blocks of `labels` into one (tensor product), in
    // first-touch order. Throws CapacityError naming the offending blocks.
    void merge(const std::vector<QubitId>& labels);

    int measure_pauli(QubitId q, PauliObservable obs, Rng& rng);
    BellIndex measure_bell(QubitId q1, QubitId q2, Rng& rng);
    void apply_unitary(const ComplexMatrix& u, const std::vector<QubitId>& targets);

    // Extends the block of `q` with fresh ancilla qubits via an isometry
    // v : C^2 -> C^2 (x) C^(2^k), given as a (2^(k+1) x 2) matrix with
    // orthonormal columns. The image qubit order is (q, ancillas...).
    void apply_isometry(QubitId q, const ComplexMatrix& v,
                        const std::vector<QubitId>& ancilla_labels);

    // Trace the qubit out of its block (block must keep at least one qubit).
    void discard(QubitId q);

    // Reduced state of any label set. Blocks are product states with respect
    // to each other, so cross-block reads compose exact tensor products.
    DensityMatrix reduced_state(const std::vector<QubitId>& labels) const;

    const std::vector<std::string>& merge_log() const { return merge_log_; }
    int qubit_cap() const { return qubit_cap_; }

private:
    std::size_t block_index(QubitId q) const;
    std::size_t merged_block_for(const std::vector<QubitId>& labels);
    std::string describe_block(std::size_t index) const;

    int qubit_cap_;
    std::vector<DensityMatrix> blocks_;   // paired with alive_ flags
    std::vector<bool> alive_;
    std::map<QubitId, std::size_t> owner_;
    std::vector<std::string> merge_log_;
};

} // namespace qss::protocol
