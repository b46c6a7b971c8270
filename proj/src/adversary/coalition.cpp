#include "qss/adversary/coalition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qss/errors.hpp"
#include "qss/states/smolin.hpp"

namespace qss::adversary {

using protocol::PartyId;
using protocol::SystemRegistry;
using protocol::Variant;

const char* to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::HonestNull:                  return "none";
        case StrategyKind::BellInterceptResend:         return "bell-intercept";
        case StrategyKind::SameObservableMeasureResend: return "same-observable";
        case StrategyKind::RandomBasisMeasureResend:    return "random-basis";
        case StrategyKind::EntanglingProbe:             return "entangle-probe";
        case StrategyKind::CrossCopySwap:               return "cross-swap";
    }
    return "?";
}

void CoalitionConfig::validate(int copies) const {
    if (members.empty() || members.size() > 2)
        throw ValidationError("coalition needs one or two members");
    for (PartyId p : members)
        if (p == PartyId::Alice)
            throw ValidationError("Alice cannot be a coalition member");
    if (members.size() == 2 && members[0] == members[1])
        throw ValidationError("duplicate coalition member");
    if (strategy.kind == StrategyKind::BellInterceptResend && members.size() != 1)
        throw ValidationError("the Bell intercept-resend strategy is a single-cheater attack");
    if (attacked_count < 0 || attacked_count > copies)
        throw ValidationError("attacked copy count must lie in [0, copies]");
    if (attacked_positions) {
        for (int t : *attacked_positions)
            if (t < 0 || t >= copies)
                throw ValidationError("attacked position out of range");
    }
}

AdversaryCoalition::AdversaryCoalition(CoalitionConfig cfg, Variant variant, int copies,
                                       Rng* rng, std::uint32_t first_fresh_label)
    : cfg_(std::move(cfg)), variant_(variant), copies_(copies), rng_(rng),
      next_label_(first_fresh_label) {
    cfg_.validate(copies);
    for (PartyId p : protocol::kReceivers)
        if (!is_member(p)) honest_.push_back(p);

    // Attacked positions. Secure variant: drawn independently per honest
    // stream (the streams are permuted independently, there is nothing to
    // align). Original variant: positions are copy indices and the attack
    // acts on a whole copy, so every honest stream shares one set.
    auto draw_set = [&]() {
        std::vector<int> chosen;
        if (cfg_.attacked_positions) {
            chosen = *cfg_.attacked_positions;
        } else if (cfg_.attacked_count > 0 &&
                   cfg_.strategy.kind != StrategyKind::HonestNull) {
            std::vector<int> all(copies_);
            std::iota(all.begin(), all.end(), 0);
            rng_->shuffle(all);
            chosen.assign(all.begin(), all.begin() + cfg_.attacked_count);
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    };
    if (variant_ == Variant::Original) {
        const std::vector<int> shared = draw_set();
        for (PartyId p : honest_) attacked_[protocol::receiver_index(p)] = shared;
    } else {
        for (PartyId p : honest_) attacked_[protocol::receiver_index(p)] = draw_set();
    }
}

bool AdversaryCoalition::is_member(PartyId p) const {
    return std::find(cfg_.members.begin(), cfg_.members.end(), p) != cfg_.members.end();
}

const std::vector<int>& AdversaryCoalition::attacked_positions(PartyId honest) const {
    return attacked_[protocol::receiver_index(honest)];
}

QubitId AdversaryCoalition::fresh_label() { return QubitId{next_label_++}; }

ComplexMatrix AdversaryCoalition::probe_isometry_matrix() const {
    if (cfg_.strategy.probe_isometry) return *cfg_.strategy.probe_isometry;
    // default: keep the original intact, forward half of a fresh Bell pair;
    // image order (original, kept half, forwarded half)
    ComplexMatrix v(8);
    const double s = 1.0 / std::sqrt(2.0);
    v.at(0, 0) = c64{s, 0.0};  // |0> -> |0>(|00>+|11>)/sqrt2
    v.at(3, 0) = c64{s, 0.0};
    v.at(4, 1) = c64{s, 0.0};  // |1> -> |1>(|00>+|11>)/sqrt2
    v.at(7, 1) = c64{s, 0.0};
    return v;
}

QubitId AdversaryCoalition::intercept(PartyId to, int position, QubitId label,
                                      SystemRegistry& registry) {
    const int stream = protocol::receiver_index(to);
    const auto& attacked = attacked_[stream];
    const bool hit = std::binary_search(attacked.begin(), attacked.end(), position);

    switch (cfg_.strategy.kind) {
        case StrategyKind::HonestNull:
            return label;

        case StrategyKind::BellInterceptResend:
            // Ack gating delivers one qubit at a time; the joint Bell
            // measurement this strategy needs is never possible.
            infeasible_ = true;
            return label;

        case StrategyKind::SameObservableMeasureResend:
        case StrategyKind::RandomBasisMeasureResend: {
            if (!hit) return label;
            const PauliObservable basis =
                cfg_.strategy.kind == StrategyKind::SameObservableMeasureResend
                    ? cfg_.strategy.attack_basis
                    : kAllObservables[rng_->uniform_int(3)];
            const int bit = registry.measure_pauli(label, basis, *rng_);
            records_[{stream, position}] = Record{basis, bit};
            return label;  // forward the collapsed qubit
        }

        case StrategyKind::EntanglingProbe: {
            if (!hit) return label;
            if (cfg_.strategy.probe_mode == ProbeMode::FreshBell) {
                const QubitId keep = fresh_label();
                const QubitId fwd = fresh_label();
                registry.add_state(states::bell_state(BellIndex::PhiPlus, {keep, fwd}));
                probe_store_[{stream, position}] = {keep};
                return fwd;
            }
            const ComplexMatrix v = probe_isometry_matrix();
            std::size_t k = 0;
            while ((std::size_t{2} << k) < v.dim()) ++k;
            std::vector<QubitId> ancillas;
            for (std::size_t i = 0; i < k; ++i) ancillas.push_back(fresh_label());
            registry.apply_isometry(label, v, ancillas);
            // kept probe = original + all ancillas but the forwarded last one
            std::vector<QubitId> probe{label};
            probe.insert(probe.end(), ancillas.begin(), ancillas.end() - 1);
            probe_store_[{stream, position}] = probe;
            return ancillas.back();
        }

        case StrategyKind::CrossCopySwap: {
            if (!hit) return label;
            QubitId fwd;
            if (pending_swap_[stream]) {
                fwd = *pending_swap_[stream];
            } else {
                // first swap of the stream: sacrifice the member's own qubit
                // received at this position (already in hand, ack-gated order)
                const int member_stream = protocol::receiver_index(cfg_.members.front());
                auto own = own_holdings_.find({member_stream, position});
                if (own != own_holdings_.end()) {
                    fwd = own->second;
                    own_holdings_.erase(own);
                } else {
                    const QubitId keep = fresh_label();
                    fwd = fresh_label();
                    registry.add_state(states::bell_state(BellIndex::PhiPlus, {keep, fwd}));
                }
            }
            pending_swap_[stream] = label;
            held_originals_[{stream, position}] = label;
            return fwd;
        }
    }
    return label;
}

void AdversaryCoalition::receive_own(PartyId member, int position, QubitId label) {
    own_holdings_[{protocol::receiver_index(member), position}] = label;
}

void AdversaryCoalition::observe_announcement(const protocol::ObservableAnnouncement& ann) {
    announced_ = ann;
    announcement_seen_ = true;
}

void AdversaryCoalition::observe_check_request(const protocol::CheckRequest&) {
    // the request carries positions only; nothing useful to extract
}

void AdversaryCoalition::measure_own_qubits(SystemRegistry& registry) {
    if (!announcement_seen_)
        throw UsageError("coalition cannot measure before the observable announcement");
    for (const auto& [key, label] : own_holdings_) {
        const auto& per_position = announced_.for_party(protocol::kReceivers[key.first]);
        const PauliObservable obs = per_position[static_cast<std::size_t>(key.second)];
        const int bit = registry.measure_pauli(label, obs, *rng_);
        records_[key] = Record{obs, bit};
    }
}

std::optional<int> AdversaryCoalition::recorded_own_bit(PartyId member, int position) const {
    auto it = records_.find({protocol::receiver_index(member), position});
    if (it == records_.end()) return std::nullopt;
    return it->second.bit;
}

int AdversaryCoalition::announce_bit(PartyId member, int position) {
    const int stream = protocol::receiver_index(member);
    const auto& per_position =
        announced_.for_party(member);
    const PauliObservable wanted = per_position[static_cast<std::size_t>(position)];
    auto it = records_.find({stream, position});
    if (it != records_.end() && it->second.basis == wanted) return it->second.bit;
    // A record in the wrong basis (or none at all) cannot be fixed up:
    // without the secret ordering there is no way to tell which copy this
    // position belongs to, so the best available bit is a fair coin.
    return rng_->coin();
}

int AdversaryCoalition::estimate_honest_bit(PartyId honest, int position,
                                            SystemRegistry& registry) {
    const int stream = protocol::receiver_index(honest);
    const PauliObservable obs = announced_.for_party(honest)[static_cast<std::size_t>(position)];

    switch (cfg_.strategy.kind) {
        case StrategyKind::SameObservableMeasureResend:
        case StrategyKind::RandomBasisMeasureResend: {
            auto it = records_.find({stream, position});
            if (it != records_.end() && it->second.basis == obs) return it->second.bit;
            return rng_->coin();
        }
        case StrategyKind::EntanglingProbe: {
            auto it = probe_store_.find({stream, position});
            if (it == probe_store_.end() || it->second.empty()) return rng_->coin();
            return registry.measure_pauli(it->second.front(), obs, *rng_);
        }
        case StrategyKind::CrossCopySwap: {
            auto it = held_originals_.find({stream, position});
            if (it == held_originals_.end()) return rng_->coin();
            if (!pending_swap_[stream] || !(*pending_swap_[stream] == it->second))
                return rng_->coin();  // that original was forwarded onward
            return registry.measure_pauli(it->second, obs, *rng_);
        }
        default:
            return rng_->coin();
    }
}

int AdversaryCoalition::final_guess(int bob_position, int charlie_position,
                                    int diana_position, SystemRegistry& registry) {
    if (!announcement_seen_)
        throw UsageError("final guess requires the observable announcement");
    const std::array<int, 3> positions{bob_position, charlie_position, diana_position};
    int guess = 0;
    for (PartyId p : protocol::kReceivers) {
        const int pos = positions[static_cast<std::size_t>(protocol::receiver_index(p))];
        if (is_member(p)) {
            const auto bit = recorded_own_bit(p, pos);
            guess ^= bit ? *bit : rng_->coin();
        } else {
            guess ^= estimate_honest_bit(p, pos, registry);
        }
    }
    return guess;
}

std::map<PartyId, QubitId> AdversaryCoalition::intercept_copy(
    int copy, const std::map<PartyId, QubitId>& in_transit, SystemRegistry& registry) {
    std::map<PartyId, QubitId> forwarded = in_transit;

    if (cfg_.strategy.kind == StrategyKind::BellInterceptResend) {
        if (in_transit.size() != 2) return forwarded;
        auto it = in_transit.begin();
        const auto [p1, q1] = *it++;
        const auto [p2, q2] = *it;
        const BellIndex outcome = registry.measure_bell(q1, q2, *rng_);
        bell_outcomes_[copy] = outcome;
        const QubitId f1 = fresh_label();
        const QubitId f2 = fresh_label();
        registry.add_state(states::bell_state(outcome, {f1, f2}));
        forwarded[p1] = f1;
        forwarded[p2] = f2;
        return forwarded;
    }

    // everything else acts on each qubit independently
    for (const auto& [party, label] : in_transit)
        forwarded[party] = intercept(party, copy, label, registry);
    return forwarded;
}

PauliObservable AdversaryCoalition::original_observable(PartyId member, int copy) {
    const Key key{protocol::receiver_index(member), copy};
    auto it = original_obs_.find(key);
    if (it != original_obs_.end()) return it->second;

    PauliObservable obs;
    switch (cfg_.strategy.kind) {
        case StrategyKind::SameObservableMeasureResend:
            obs = cfg_.strategy.attack_basis;
            break;
        case StrategyKind::RandomBasisMeasureResend: {
            // reuse the basis chosen at intercept time when there is one
            auto rec = records_.end();
            for (PartyId h : honest_) {
                rec = records_.find({protocol::receiver_index(h), copy});
                if (rec != records_.end()) break;
            }
            obs = rec != records_.end() ? rec->second.basis
                                        : kAllObservables[rng_->uniform_int(3)];
            break;
        }
        default:
            obs = kAllObservables[rng_->uniform_int(3)];
            break;
    }
    original_obs_[key] = obs;
    return obs;
}

int AdversaryCoalition::original_measure_own(PartyId member, int copy,
                                             SystemRegistry& registry) {
    const Key key{protocol::receiver_index(member), copy};
    auto own = own_holdings_.find(key);
    if (own == own_holdings_.end()) return rng_->coin();
    const PauliObservable obs = original_observable(member, copy);
    const int bit = registry.measure_pauli(own->second, obs, *rng_);
    records_[key] = Record{obs, bit};
    return bit;
}

int AdversaryCoalition::final_guess_original(int copy, PauliObservable obs,
                                             SystemRegistry& registry) {
    (void)registry;
    switch (cfg_.strategy.kind) {
        case StrategyKind::BellInterceptResend: {
            auto bell = bell_outcomes_.find(copy);
            auto own = records_.find({protocol::receiver_index(cfg_.members.front()), copy});
            if (bell == bell_outcomes_.end() || own == records_.end() ||
                own->second.basis != obs)
                return rng_->coin();
            return own->second.bit ^ bell_pair_parity(bell->second, obs);
        }
        case StrategyKind::SameObservableMeasureResend:
        case StrategyKind::RandomBasisMeasureResend: {
            // XOR of every bit the coalition measured for this copy, own and
            // intercepted; valid when all of them were taken in `obs`.
            int guess = 0;
            int found = 0;
            for (int stream = 0; stream < 3; ++stream) {
                auto it = records_.find({stream, copy});
                if (it == records_.end() || it->second.basis != obs) continue;
                guess ^= it->second.bit;
                ++found;
            }
            if (found != 3) return rng_->coin();
            return guess;
        }
        default:
            return rng_->coin();
    }
}

} // namespace qss::adversary
