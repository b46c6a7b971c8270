// Cheating strategies behind a single coalition interface. A coalition is a
// set of at most two corrupted receivers that can intercept qubits in transit
// to the remaining honest receiver(s), watch every broadcast, override its own
// result announcements, and produce a final guess of Alice's secret bit.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qss/protocol/messages.hpp"
#include "qss/protocol/registry.hpp"
#include "qss/protocol/types.hpp"

namespace qss::adversary {

enum class StrategyKind : std::uint8_t {
    HonestNull,
    BellInterceptResend,
    SameObservableMeasureResend,
    RandomBasisMeasureResend,
    EntanglingProbe,
    CrossCopySwap,
};

enum class ProbeMode : std::uint8_t { FreshBell, Isometry };

struct StrategyConfig {
    StrategyKind kind = StrategyKind::HonestNull;

    // Measure-resend basis (SameObservableMeasureResend); Z by default.
    PauliObservable attack_basis = PauliObservable::Z;

    // EntanglingProbe: FreshBell forwards half of a fresh Bell pair and keeps
    // only the other half as the probe (the intercepted original stays parked
    // in the registry, unused). Isometry embeds the intercepted qubit into a
    // larger kept system before forwarding a substitute, so the original's
    // content remains available to the final guess.
    ProbeMode probe_mode = ProbeMode::FreshBell;

    // Optional isometry override: square matrix of dim 2^(k+1) whose first
    // two columns are the orthonormal images of |0>, |1>; image qubit order
    // is (kept original, ancillas...), and the LAST image qubit is forwarded.
    std::optional<ComplexMatrix> probe_isometry;
};

struct CoalitionConfig {
    std::vector<protocol::PartyId> members;  // 1 or 2 receivers, never Alice
    StrategyConfig strategy;
    int attacked_count = 0;  // m: attacked positions per honest stream
    // Explicit 0-based attacked positions (testing); overrides attacked_count.
    std::optional<std::vector<int>> attacked_positions;

    void validate(int copies) const;
};

const char* to_string(StrategyKind kind);

class AdversaryCoalition {
public:
    AdversaryCoalition(CoalitionConfig cfg, protocol::Variant variant, int copies,
                       Rng* rng, std::uint32_t first_fresh_label);

    bool is_member(protocol::PartyId p) const;
    const std::vector<protocol::PartyId>& honest_receivers() const { return honest_; }
    bool infeasible() const { return infeasible_; }

    // 0-based attacked positions on an honest receiver's stream (sorted).
    const std::vector<int>& attacked_positions(protocol::PartyId honest) const;

    // --- secure variant hooks -------------------------------------------
    // One qubit in transit to an honest receiver; something must be
    // forwarded immediately (ack gating). Returns the delivered label.
    QubitId intercept(protocol::PartyId to, int position, QubitId label,
                      protocol::SystemRegistry& registry);

    void receive_own(protocol::PartyId member, int position, QubitId label);

    void observe_announcement(const protocol::ObservableAnnouncement& ann);
    void observe_check_request(const protocol::CheckRequest& req);

    // Members measure every qubit they still hold in the announced basis.
    void measure_own_qubits(protocol::SystemRegistry& registry);

    std::optional<int> recorded_own_bit(protocol::PartyId member, int position) const;

    // Result announcement for a member's checked position: the recorded bit
    // when it was measured in the announced basis, a uniform bit otherwise.
    int announce_bit(protocol::PartyId member, int position);

    // Best guess of Alice's bit after the step-(4) position reveal.
    int final_guess(int bob_position, int charlie_position, int diana_position,
                    protocol::SystemRegistry& registry);

    // --- original variant hooks -----------------------------------------
    // All of one copy's honest-receiver qubits at once (no ack gating).
    std::map<protocol::PartyId, QubitId> intercept_copy(
        int copy, const std::map<protocol::PartyId, QubitId>& in_transit,
        protocol::SystemRegistry& registry);

    // Observable the member publicly claims for this copy.
    PauliObservable original_observable(protocol::PartyId member, int copy);

    // Member measures its own copy-qubit in its announced observable.
    int original_measure_own(protocol::PartyId member, int copy,
                             protocol::SystemRegistry& registry);

    // Guess for an all-same-observable copy of the original protocol.
    int final_guess_original(int copy, PauliObservable obs,
                             protocol::SystemRegistry& registry);

private:
    struct Record {
        PauliObservable basis;
        int bit;
    };
    using Key = std::pair<int, int>;  // (receiver index of the stream, position)

    QubitId fresh_label();
    int estimate_honest_bit(protocol::PartyId honest, int position,
                            protocol::SystemRegistry& registry);
    ComplexMatrix probe_isometry_matrix() const;

    CoalitionConfig cfg_;
    protocol::Variant variant_;
    int copies_;
    Rng* rng_;
    std::uint32_t next_label_;
    std::vector<protocol::PartyId> honest_;
    std::array<std::vector<int>, 3> attacked_;  // per receiver index
    bool infeasible_ = false;

    std::map<Key, Record> records_;            // intercept + own measurements
    std::map<Key, QubitId> own_holdings_;      // member qubits not yet measured
    std::map<Key, std::vector<QubitId>> probe_store_;
    std::map<Key, QubitId> held_originals_;    // swap attack delay line
    std::array<std::optional<QubitId>, 3> pending_swap_;
    std::map<int, BellIndex> bell_outcomes_;   // original variant, by copy
    std::map<Key, PauliObservable> original_obs_;  // member announcements, by copy
    protocol::ObservableAnnouncement announced_;
    bool announcement_seen_ = false;
};

} // namespace qss::adversary
