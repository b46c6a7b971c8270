#include "qss/protocol/engine.hpp"

#include <algorithm>
#include <numeric>

#include "qss/errors.hpp"
#include "qss/states/smolin.hpp"

namespace qss::protocol {

namespace {

// Per-run random streams, derived from the config seed. Keeping them apart
// makes the ordering secret re-drawable in isolation (feature-(i) tests).
enum Stream : std::uint64_t {
    kOrdering = 0,
    kObservables = 1,
    kChecks = 2,
    kMeasurements = 3,
    kAdversary = 4,
    kSecretPick = 5,
};

// Copy j owns labels 4j .. 4j+3 in party order A, B, C, D.
QubitId qubit_label(int copy, int party_slot) {
    return QubitId{static_cast<std::uint32_t>(4 * copy + party_slot)};
}

QubitId receiver_qubit(int copy, PartyId p) { return qubit_label(copy, receiver_index(p) + 1); }

struct RunContext {
    const ProtocolConfig& config;
    SystemRegistry registry;
    std::optional<adversary::AdversaryCoalition> coalition;
    ProtocolOutcome outcome;

    RunContext(const ProtocolConfig& cfg,
               const std::optional<adversary::CoalitionConfig>& coalition_cfg,
               Variant variant, Rng* adv_rng)
        : config(cfg), registry(cfg.qubit_cap) {
        for (int j = 0; j < cfg.copies; ++j)
            registry.add_state(states::smolin4(
                {qubit_label(j, 0), qubit_label(j, 1), qubit_label(j, 2), qubit_label(j, 3)}));
        if (coalition_cfg)
            coalition.emplace(*coalition_cfg, variant, cfg.copies, adv_rng,
                              static_cast<std::uint32_t>(4 * cfg.copies));
        outcome.copies.resize(static_cast<std::size_t>(cfg.copies));
    }

    void emit(Message msg) {
        if (config.record_transcript) outcome.transcript.push_back(std::move(msg));
    }

    bool member(PartyId p) const { return coalition && coalition->is_member(p); }

    void mark_attacked(const OrderingSecret* ordering) {
        if (!coalition) return;
        for (PartyId honest : coalition->honest_receivers()) {
            for (int t : coalition->attacked_positions(honest)) {
                const int copy = ordering ? ordering->copy_at(honest, t) : t;
                outcome.copies[static_cast<std::size_t>(copy)].attacked = true;
            }
        }
        outcome.strategy_infeasible = coalition->infeasible();
    }
};

} // namespace

void ProtocolConfig::validate() const {
    if (copies < 1) throw ValidationError("config: need at least one copy");
    if (variant == Variant::Secure && copies < 2)
        throw ValidationError("config: the secure variant needs at least two copies");
    if (!(check_rate > 0.0 && check_rate <= 1.0))
        throw ValidationError("config: check rate must lie in (0, 1]");
    if (qubit_cap < 4)
        throw ValidationError("config: qubit cap below a single 4-qubit copy");
}

OrderingSecret OrderingSecret::draw(int copies, Rng& rng) {
    OrderingSecret s;
    for (int r = 0; r < 3; ++r) {
        std::vector<int>& perm = s.to_position_[r];
        perm.resize(static_cast<std::size_t>(copies));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        s.to_copy_[r].assign(perm.size(), 0);
        for (int j = 0; j < copies; ++j) s.to_copy_[r][static_cast<std::size_t>(perm[j])] = j;
    }
    return s;
}

OrderingSecret OrderingSecret::identity(int copies) {
    OrderingSecret s;
    for (int r = 0; r < 3; ++r) {
        s.to_position_[r].resize(static_cast<std::size_t>(copies));
        std::iota(s.to_position_[r].begin(), s.to_position_[r].end(), 0);
        s.to_copy_[r] = s.to_position_[r];
    }
    return s;
}

int OrderingSecret::position_of(PartyId party, int copy) const {
    return to_position_[static_cast<std::size_t>(receiver_index(party))]
                       [static_cast<std::size_t>(copy)];
}

int OrderingSecret::copy_at(PartyId party, int position) const {
    return to_copy_[static_cast<std::size_t>(receiver_index(party))]
                   [static_cast<std::size_t>(position)];
}

int reconstruct_from_bits(int bob_bit, int charlie_bit, int diana_bit) {
    return (bob_bit ^ charlie_bit ^ diana_bit) & 1;
}

int reconstruct_secret(const ProtocolOutcome& outcome) {
    if (outcome.detected)
        throw UsageError("reconstruct_secret: run ended in detection, nothing was revealed");
    if (!outcome.reconstructed_bit)
        throw UsageError("reconstruct_secret: no secret copy was selected");
    return *outcome.reconstructed_bit;
}

CheckRequest select_check_sets(int copies, double check_rate, Rng& rng) {
    CheckRequest req;
    for (int r = 0; r < 3; ++r)
        for (int t = 0; t < copies; ++t)
            if (rng.bernoulli(check_rate)) req.positions[static_cast<std::size_t>(r)].push_back(t);
    return req;
}

CheckResult verify_checks(const CheckRequest& request,
                          const std::vector<ResultAnnouncement>& announcements,
                          const OrderingSecret& ordering,
                          const std::vector<int>& alice_bits) {
    // (receiver, 0-based position) -> bit
    std::map<std::pair<int, int>, int> bits;
    for (const ResultAnnouncement& a : announcements)
        bits[{receiver_index(a.from), a.position - 1}] = a.bit;

    CheckResult result;
    const int copies = static_cast<int>(alice_bits.size());
    for (int j = 0; j < copies; ++j) {
        int parity = alice_bits[static_cast<std::size_t>(j)];
        bool covered = true;
        bool missing = false;
        for (PartyId p : kReceivers) {
            const int pos = ordering.position_of(p, j);
            const auto& set = request.for_party(p);
            if (!std::binary_search(set.begin(), set.end(), pos)) {
                covered = false;
                break;
            }
            auto it = bits.find({receiver_index(p), pos});
            if (it == bits.end()) missing = true;
            else parity ^= it->second;
        }
        if (!covered) continue;
        result.verified_copies.push_back(j);
        if (missing) {
            result.missing_announcement = true;
            result.detected = true;
            result.failing_copies.push_back(j);
        } else if (parity != 0) {
            result.detected = true;
            result.failing_copies.push_back(j);
        }
    }
    return result;
}

ProtocolOutcome run_original_protocol(
    const ProtocolConfig& config,
    const std::optional<adversary::CoalitionConfig>& coalition_cfg) {
    config.validate();
    if (config.variant != Variant::Original)
        throw UsageError("run_original_protocol: config.variant mismatch");

    const int n = config.copies;
    Rng rng_obs(Rng::derive(config.seed, kObservables));
    Rng rng_meas(Rng::derive(config.seed, kMeasurements));
    Rng rng_adv(Rng::derive(config.seed, kAdversary));

    RunContext ctx(config, coalition_cfg, Variant::Original, &rng_adv);

    // dispatch: all of a copy's receiver qubits are in flight together
    std::array<std::vector<QubitId>, 3> delivered;
    for (auto& v : delivered) v.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::map<PartyId, QubitId> in_transit;
        for (PartyId p : kReceivers) {
            ctx.emit(QubitSend{p, j + 1});
            if (ctx.member(p)) ctx.coalition->receive_own(p, j, receiver_qubit(j, p));
            else in_transit[p] = receiver_qubit(j, p);
        }
        const bool attacked =
            ctx.coalition && !ctx.coalition->honest_receivers().empty() &&
            std::binary_search(
                ctx.coalition->attacked_positions(ctx.coalition->honest_receivers().front()).begin(),
                ctx.coalition->attacked_positions(ctx.coalition->honest_receivers().front()).end(), j);
        if (attacked && !in_transit.empty())
            in_transit = ctx.coalition->intercept_copy(j, in_transit, ctx.registry);
        for (PartyId p : kReceivers) {
            if (!ctx.member(p)) delivered[static_cast<std::size_t>(receiver_index(p))]
                                         [static_cast<std::size_t>(j)] = in_transit[p];
            ctx.emit(Ack{p, j + 1});
        }
    }

    // every party measures an observable of its own choice, then announces it
    ObservableAnnouncement ann;
    for (auto& v : ann.per_party) v.resize(static_cast<std::size_t>(n));
    std::vector<int> alice_bits(static_cast<std::size_t>(n));
    std::array<std::vector<int>, 3> receiver_bits;
    for (auto& v : receiver_bits) v.assign(static_cast<std::size_t>(n), -1);

    for (int j = 0; j < n; ++j) {
        const PauliObservable va = config.observable_policy.draw(rng_obs);
        ann.for_party(PartyId::Alice)[static_cast<std::size_t>(j)] = va;
        alice_bits[static_cast<std::size_t>(j)] =
            ctx.registry.measure_pauli(qubit_label(j, 0), va, rng_meas);
    }
    for (PartyId p : kReceivers) {
        const auto r = static_cast<std::size_t>(receiver_index(p));
        for (int j = 0; j < n; ++j) {
            PauliObservable obs;
            int bit;
            if (ctx.member(p)) {
                obs = ctx.coalition->original_observable(p, j);
                bit = ctx.coalition->original_measure_own(p, j, ctx.registry);
            } else {
                obs = config.observable_policy.draw(rng_obs);
                bit = ctx.registry.measure_pauli(delivered[r][static_cast<std::size_t>(j)],
                                                 obs, rng_meas);
            }
            ann.for_party(p)[static_cast<std::size_t>(j)] = obs;
            receiver_bits[r][static_cast<std::size_t>(j)] = bit;
        }
    }
    ctx.emit(ann);
    if (ctx.coalition) ctx.coalition->observe_announcement(ann);

    // record keeping + usable-copy scan
    std::optional<int> first_usable;
    for (int j = 0; j < n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        CopyRecord& rec = ctx.outcome.copies[js];
        rec.observable = ann.for_party(PartyId::Alice)[js];
        rec.measured_bits = {alice_bits[js], receiver_bits[0][js], receiver_bits[1][js],
                             receiver_bits[2][js]};
        rec.usable = ann.for_party(PartyId::Bob)[js] == rec.observable &&
                     ann.for_party(PartyId::Charlie)[js] == rec.observable &&
                     ann.for_party(PartyId::Diana)[js] == rec.observable;
        if (rec.usable && !first_usable) first_usable = j;
    }
    ctx.mark_attacked(nullptr);

    if (!first_usable) {
        ctx.outcome.protocol_failure = true;  // no copy with agreeing observables
        return std::move(ctx.outcome);
    }

    const int k = *first_usable;
    const auto ks = static_cast<std::size_t>(k);
    ctx.outcome.secret_copy = k;
    ctx.outcome.alice_bit = alice_bits[ks];
    ctx.outcome.reconstructed_bit = reconstruct_from_bits(
        receiver_bits[0][ks], receiver_bits[1][ks], receiver_bits[2][ks]);
    if (ctx.coalition)
        ctx.outcome.cheater_guess = ctx.coalition->final_guess_original(
            k, ctx.outcome.copies[ks].observable, ctx.registry);
    return std::move(ctx.outcome);
}

ProtocolOutcome run_secure_protocol(
    const ProtocolConfig& config,
    const std::optional<adversary::CoalitionConfig>& coalition_cfg) {
    config.validate();
    if (config.variant != Variant::Secure)
        throw UsageError("run_secure_protocol: config.variant mismatch");

    const int n = config.copies;
    Rng rng_order(config.ordering_seed ? *config.ordering_seed
                                       : Rng::derive(config.seed, kOrdering));
    Rng rng_obs(Rng::derive(config.seed, kObservables));
    Rng rng_check(Rng::derive(config.seed, kChecks));
    Rng rng_meas(Rng::derive(config.seed, kMeasurements));
    Rng rng_adv(Rng::derive(config.seed, kAdversary));
    Rng rng_secret(Rng::derive(config.seed, kSecretPick));

    RunContext ctx(config, coalition_cfg, Variant::Secure, &rng_adv);
    const OrderingSecret ordering = OrderingSecret::draw(n, rng_order);

    // step (1): ack-gated streaming in secret order, one position at a time
    std::array<std::vector<QubitId>, 3> holdings;
    for (auto& v : holdings) v.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        for (PartyId p : kReceivers) {
            const int j = ordering.copy_at(p, t);
            const QubitId label = receiver_qubit(j, p);
            ctx.emit(QubitSend{p, t + 1});
            QubitId arrived = label;
            if (ctx.coalition) {
                if (ctx.member(p)) ctx.coalition->receive_own(p, t, label);
                else arrived = ctx.coalition->intercept(p, t, label, ctx.registry);
            }
            holdings[static_cast<std::size_t>(receiver_index(p))]
                    [static_cast<std::size_t>(t)] = arrived;
            ctx.emit(Ack{p, t + 1});
        }
    }

    // step (2): one observable per copy, announced per position
    std::vector<PauliObservable> copy_obs(static_cast<std::size_t>(n));
    for (auto& obs : copy_obs) obs = config.observable_policy.draw(rng_obs);
    ObservableAnnouncement ann;
    for (PartyId p : kReceivers) {
        auto& per_position = ann.for_party(p);
        per_position.resize(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t)
            per_position[static_cast<std::size_t>(t)] =
                copy_obs[static_cast<std::size_t>(ordering.copy_at(p, t))];
    }
    ctx.emit(ann);
    if (ctx.coalition) ctx.coalition->observe_announcement(ann);

    // measurements: Alice first, then the receivers in party order
    std::vector<int> alice_bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        alice_bits[static_cast<std::size_t>(j)] = ctx.registry.measure_pauli(
            qubit_label(j, 0), copy_obs[static_cast<std::size_t>(j)], rng_meas);

    std::array<std::vector<int>, 3> position_bits;  // per receiver, by position
    for (auto& v : position_bits) v.assign(static_cast<std::size_t>(n), -1);
    if (ctx.coalition) ctx.coalition->measure_own_qubits(ctx.registry);
    for (PartyId p : kReceivers) {
        const auto r = static_cast<std::size_t>(receiver_index(p));
        for (int t = 0; t < n; ++t) {
            const auto ts = static_cast<std::size_t>(t);
            if (ctx.member(p)) {
                const auto bit = ctx.coalition->recorded_own_bit(p, t);
                position_bits[r][ts] = bit ? *bit : -1;
            } else {
                position_bits[r][ts] = ctx.registry.measure_pauli(
                    holdings[r][ts], ann.for_party(p)[ts], rng_meas);
            }
        }
    }

    for (int j = 0; j < n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        CopyRecord& rec = ctx.outcome.copies[js];
        rec.observable = copy_obs[js];
        rec.measured_bits = {
            alice_bits[js],
            position_bits[0][static_cast<std::size_t>(ordering.position_of(PartyId::Bob, j))],
            position_bits[1][static_cast<std::size_t>(ordering.position_of(PartyId::Charlie, j))],
            position_bits[2][static_cast<std::size_t>(ordering.position_of(PartyId::Diana, j))]};
    }

    // step (3): checks
    const CheckRequest request = select_check_sets(n, config.check_rate, rng_check);
    ctx.emit(request);
    if (ctx.coalition) ctx.coalition->observe_check_request(request);

    std::vector<ResultAnnouncement> announcements;
    for (PartyId p : kReceivers) {
        const auto r = static_cast<std::size_t>(receiver_index(p));
        for (int pos : request.for_party(p)) {
            const auto ps = static_cast<std::size_t>(pos);
            const int bit = ctx.member(p) ? ctx.coalition->announce_bit(p, pos)
                                          : position_bits[r][ps];
            announcements.push_back(ResultAnnouncement{p, pos + 1, bit});
            ctx.emit(announcements.back());
            ctx.outcome.copies[static_cast<std::size_t>(ordering.copy_at(p, pos))]
                .announced_bits[static_cast<std::size_t>(receiver_index(p)) + 1] = bit;
        }
    }

    const CheckResult checks = verify_checks(request, announcements, ordering, alice_bits);
    ctx.outcome.checked_copies = checks.verified_copies;
    ctx.outcome.failing_copies = checks.failing_copies;
    for (int j : checks.verified_copies)
        ctx.outcome.copies[static_cast<std::size_t>(j)].fully_covered = true;
    for (int j : checks.failing_copies)
        ctx.outcome.copies[static_cast<std::size_t>(j)].parity_ok = false;
    ctx.mark_attacked(&ordering);

    if (checks.detected) {
        ctx.outcome.detected = true;  // abort before step (4): nothing revealed
        return std::move(ctx.outcome);
    }

    // step (4): a copy qualifies as secret only if none of its positions was
    // opened during the check
    std::vector<int> eligible;
    for (int j = 0; j < n; ++j) {
        bool untouched = true;
        for (PartyId p : kReceivers) {
            const auto& set = request.for_party(p);
            if (std::binary_search(set.begin(), set.end(), ordering.position_of(p, j))) {
                untouched = false;
                break;
            }
        }
        if (untouched) eligible.push_back(j);
    }
    if (eligible.empty()) {
        ctx.outcome.protocol_failure = true;
        return std::move(ctx.outcome);
    }

    const int k = eligible[rng_secret.uniform_int(static_cast<std::uint32_t>(eligible.size()))];
    const auto ks = static_cast<std::size_t>(k);
    const int pos_b = ordering.position_of(PartyId::Bob, k);
    const int pos_c = ordering.position_of(PartyId::Charlie, k);
    const int pos_d = ordering.position_of(PartyId::Diana, k);
    ctx.emit(RevealPositions{pos_b + 1, pos_c + 1, pos_d + 1});

    auto reconstruction_bit = [&](PartyId p, int pos) {
        if (!ctx.member(p)) return position_bits[static_cast<std::size_t>(receiver_index(p))]
                                                [static_cast<std::size_t>(pos)];
        const auto bit = ctx.coalition->recorded_own_bit(p, pos);
        return bit ? *bit : rng_adv.coin();
    };
    ctx.outcome.secret_copy = k;
    ctx.outcome.alice_bit = alice_bits[ks];
    ctx.outcome.reconstructed_bit = reconstruct_from_bits(
        reconstruction_bit(PartyId::Bob, pos_b), reconstruction_bit(PartyId::Charlie, pos_c),
        reconstruction_bit(PartyId::Diana, pos_d));
    if (ctx.coalition)
        ctx.outcome.cheater_guess =
            ctx.coalition->final_guess(pos_b, pos_c, pos_d, ctx.registry);
    return std::move(ctx.outcome);
}

ProtocolOutcome run_protocol(const ProtocolConfig& config,
                             const std::optional<adversary::CoalitionConfig>& coalition) {
    return config.variant == Variant::Original ? run_original_protocol(config, coalition)
                                               : run_secure_protocol(config, coalition);
}

} // namespace qss::protocol
