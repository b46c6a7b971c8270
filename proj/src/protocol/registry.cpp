#include "qss/protocol/registry.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "qss/errors.hpp"
#include "qss/kernels.hpp"

namespace qss::protocol {

SystemRegistry::SystemRegistry(int qubit_cap) : qubit_cap_(qubit_cap) {
    if (qubit_cap < 1) throw ValidationError("SystemRegistry: qubit cap must be >= 1");
}

void SystemRegistry::add_state(DensityMatrix state) {
    if (static_cast<int>(state.qubit_count()) > qubit_cap_)
        throw CapacityError("add_state: block of " + std::to_string(state.qubit_count()) +
                            " qubits exceeds cap " + std::to_string(qubit_cap_));
    for (QubitId q : state.labels())
        if (owner_.count(q))
            throw LabelError("add_state: label " + std::to_string(q.value) +
                             " already registered");
    const std::size_t index = blocks_.size();
    for (QubitId q : state.labels()) owner_[q] = index;
    blocks_.push_back(std::move(state));
    alive_.push_back(true);
}

std::size_t SystemRegistry::block_count() const {
    return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
}

bool SystemRegistry::owns(QubitId q) const { return owner_.count(q) != 0; }

std::size_t SystemRegistry::block_index(QubitId q) const {
    auto it = owner_.find(q);
    if (it == owner_.end())
        throw LabelError("registry: unknown qubit label " + std::to_string(q.value));
    return it->second;
}

const DensityMatrix& SystemRegistry::block_of(QubitId q) const {
    return blocks_[block_index(q)];
}

std::string SystemRegistry::describe_block(std::size_t index) const {
    std::string out = "{";
    const auto& labels = blocks_[index].labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(labels[i].value);
    }
    return out + "}";
}

std::size_t SystemRegistry::merged_block_for(const std::vector<QubitId>& labels) {
    std::vector<std::size_t> involved;
    for (QubitId q : labels) {
        const std::size_t b = block_index(q);
        if (std::find(involved.begin(), involved.end(), b) == involved.end())
            involved.push_back(b);
    }
    if (involved.size() == 1) return involved.front();

    std::size_t total = 0;
    std::string names;
    for (std::size_t b : involved) {
        total += blocks_[b].qubit_count();
        if (!names.empty()) names += " + ";
        names += describe_block(b);
    }
    if (total > static_cast<std::size_t>(qubit_cap_))
        throw CapacityError("registry merge of blocks " + names + " needs " +
                            std::to_string(total) + " qubits, cap is " +
                            std::to_string(qubit_cap_));

    DensityMatrix merged = blocks_[involved[0]];
    for (std::size_t i = 1; i < involved.size(); ++i)
        merged = tensor_product(merged, blocks_[involved[i]],
                                static_cast<std::size_t>(qubit_cap_));
    merge_log_.push_back("merge " + names + " -> " + std::to_string(total) + " qubits");

    const std::size_t index = blocks_.size();
    for (QubitId q : merged.labels()) owner_[q] = index;
    for (std::size_t b : involved) alive_[b] = false;
    blocks_.push_back(std::move(merged));
    alive_.push_back(true);
    return index;
}

void SystemRegistry::merge(const std::vector<QubitId>& labels) {
    (void)merged_block_for(labels);
}

int SystemRegistry::measure_pauli(QubitId q, PauliObservable obs, Rng& rng) {
    const std::size_t b = block_index(q);
    auto [outcome, post] = qss::measure_pauli(blocks_[b], q, obs, rng);
    blocks_[b] = std::move(post);
    return outcome.bit;
}

BellIndex SystemRegistry::measure_bell(QubitId q1, QubitId q2, Rng& rng) {
    const std::size_t b = merged_block_for({q1, q2});
    auto [idx, post] = qss::measure_bell(blocks_[b], q1, q2, rng);
    blocks_[b] = std::move(post);
    return idx;
}

void SystemRegistry::apply_unitary(const ComplexMatrix& u,
                                   const std::vector<QubitId>& targets) {
    const std::size_t b = merged_block_for(targets);
    blocks_[b] = qss::apply_unitary(blocks_[b], u, targets);
}

void SystemRegistry::apply_isometry(QubitId q, const ComplexMatrix& v,
                                    const std::vector<QubitId>& ancilla_labels) {
    // v is stored as a square matrix whose first two columns carry the
    // isometry; validate v^dag v = I on those columns.
    const std::size_t out_dim = v.dim();
    for (std::size_t c1 = 0; c1 < 2; ++c1)
        for (std::size_t c2 = 0; c2 < 2; ++c2) {
            c64 dot{0.0, 0.0};
            for (std::size_t r = 0; r < out_dim; ++r)
                dot += std::conj(v.at(r, c1)) * v.at(r, c2);
            const c64 want = (c1 == c2) ? c64{1.0, 0.0} : c64{0.0, 0.0};
            if (std::abs(dot - want) > kValidationTol)
                throw ValidationError("apply_isometry: columns are not orthonormal");
        }
    const std::size_t k = ancilla_labels.size();
    if (out_dim != (std::size_t{2} << k))
        throw ValidationError("apply_isometry: dimension does not match ancilla count");
    for (QubitId a : ancilla_labels)
        if (owner_.count(a))
            throw LabelError("apply_isometry: ancilla label already in use");

    const std::size_t b = block_index(q);
    const DensityMatrix& old = blocks_[b];
    if (static_cast<int>(old.qubit_count() + k) > qubit_cap_)
        throw CapacityError("apply_isometry: block " + describe_block(b) + " would need " +
                            std::to_string(old.qubit_count() + k) + " qubits, cap is " +
                            std::to_string(qubit_cap_));

    // Reorder so q is last, embed rho -> V rho V^dag on that qubit, with the
    // image qubits appended at the end.
    std::vector<QubitId> order;
    for (QubitId l : old.labels())
        if (!(l == q)) order.push_back(l);
    order.push_back(q);
    const DensityMatrix arranged = qss::permute_qubits(old, order);

    const std::size_t rest_dim = arranged.dim() / 2;
    const std::size_t new_dim = rest_dim * out_dim;
    ComplexMatrix out(new_dim);
    for (std::size_t r = 0; r < rest_dim; ++r)
        for (std::size_t c = 0; c < rest_dim; ++c)
            for (std::size_t rq = 0; rq < 2; ++rq)
                for (std::size_t cq = 0; cq < 2; ++cq) {
                    const c64 val = arranged.matrix().at(r * 2 + rq, c * 2 + cq);
                    if (val == c64{0.0, 0.0}) continue;
                    for (std::size_t ri = 0; ri < out_dim; ++ri) {
                        const c64 left = v.at(ri, rq);
                        if (left == c64{0.0, 0.0}) continue;
                        for (std::size_t ci = 0; ci < out_dim; ++ci)
                            out.at(r * out_dim + ri, c * out_dim + ci) +=
                                left * val * std::conj(v.at(ci, cq));
                    }
                }

    std::vector<QubitId> new_labels(order.begin(), order.end() - 1);
    new_labels.push_back(q);
    new_labels.insert(new_labels.end(), ancilla_labels.begin(), ancilla_labels.end());

    const std::size_t index = blocks_.size();
    blocks_.emplace_back(std::move(out), new_labels);
    alive_.push_back(true);
    alive_[b] = false;
    for (QubitId l : new_labels) owner_[l] = index;
}

void SystemRegistry::discard(QubitId q) {
    const std::size_t b = block_index(q);
    if (blocks_[b].qubit_count() == 1)
        throw DomainError("discard: block would become empty");
    blocks_[b] = qss::partial_trace(blocks_[b], {q});
    owner_.erase(q);
}

DensityMatrix SystemRegistry::reduced_state(const std::vector<QubitId>& labels) const {
    // group requested labels by owning block, preserving request order per block
    std::vector<std::pair<std::size_t, std::vector<QubitId>>> groups;
    for (QubitId q : labels) {
        const std::size_t b = block_index(q);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == b; });
        if (it == groups.end()) groups.push_back({b, {q}});
        else it->second.push_back(q);
    }
    std::optional<DensityMatrix> result;
    for (const auto& [b, want] : groups) {
        std::vector<QubitId> drop;
        for (QubitId l : blocks_[b].labels())
            if (std::find(want.begin(), want.end(), l) == want.end()) drop.push_back(l);
        DensityMatrix part = drop.empty() ? blocks_[b] : qss::partial_trace(blocks_[b], drop);
        part = qss::permute_qubits(part, want);
        result = result ? tensor_product(*result, part, static_cast<std::size_t>(qubit_cap_))
                        : std::move(part);
    }
    if (!result) throw LabelError("reduced_state: empty label set");
    return qss::permute_qubits(*result, labels);
}

} // namespace qss::protocol
