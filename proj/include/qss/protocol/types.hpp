// Protocol configuration and run-outcome types.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qss/density_matrix.hpp"
#include "qss/pauli.hpp"
#include "qss/protocol/messages.hpp"
#include "qss/rng.hpp"

namespace qss::protocol {

enum class Variant : std::uint8_t { Original, Secure };

// How Alice draws the measurement observable of a copy (and, in the original
// variant, how every honest party draws its own choice). Uniform over
// {X, Y, Z} unless pinned for a test or experiment.
struct ObservablePolicy {
    enum class Kind : std::uint8_t { UniformXYZ, Fixed };
    Kind kind = Kind::UniformXYZ;
    PauliObservable fixed = PauliObservable::Z;

    PauliObservable draw(Rng& rng) const {
        if (kind == Kind::Fixed) return fixed;
        return kAllObservables[rng.uniform_int(3)];
    }
};

struct ProtocolConfig {
    Variant variant = Variant::Secure;
    int copies = 64;           // n
    double check_rate = 0.5;   // p, per-party per-position selection probability
    ObservablePolicy observable_policy{};
    std::uint64_t seed = 0;
    int qubit_cap = static_cast<int>(kDefaultQubitCap);
    bool record_transcript = false;

    // Testing hook: re-seed only the ordering permutations, leaving every
    // other random stream of the run untouched.
    std::optional<std::uint64_t> ordering_seed;

    void validate() const;
};

// Alice's private permutations: copy index -> transmission position, one per
// receiving party. Never serialized into the transcript before step (4).
class OrderingSecret {
public:
    static OrderingSecret draw(int copies, Rng& rng);
    static OrderingSecret identity(int copies);

    int position_of(PartyId party, int copy) const;
    int copy_at(PartyId party, int position) const;
    int copies() const { return static_cast<int>(to_position_[0].size()); }

private:
    // index 0 = Bob, 1 = Charlie, 2 = Diana
    std::array<std::vector<int>, 3> to_position_;
    std::array<std::vector<int>, 3> to_copy_;
};

// Omniscient per-copy diagnostics, filled by the engine for tests and metric
// aggregation. Not visible to any protocol party.
struct CopyRecord {
    PauliObservable observable = PauliObservable::Z;
    std::array<int, 4> measured_bits{-1, -1, -1, -1};   // A, B, C, D as measured
    std::array<int, 4> announced_bits{-1, -1, -1, -1};  // -1 = not announced
    bool attacked = false;
    bool fully_covered = false;  // all three receiver positions checked
    bool parity_ok = true;       // meaningful when fully_covered
    bool usable = false;         // original variant: all announced observables equal
};

struct ProtocolOutcome {
    bool detected = false;
    bool protocol_failure = false;    // secure: no fully unchecked copy left
    bool strategy_infeasible = false; // e.g. joint measurement under ack gating
    std::vector<int> checked_copies;  // fully covered copies
    std::vector<int> failing_copies;
    std::optional<int> secret_copy;
    std::optional<int> alice_bit;
    std::optional<int> reconstructed_bit;
    std::optional<int> cheater_guess;
    std::vector<CopyRecord> copies;
    std::vector<Message> transcript;  // only when record_transcript is set
};

// XOR reconstruction from the three receivers' bits.
int reconstruct_from_bits(int bob_bit, int charlie_bit, int diana_bit);

// Outcome-level form; throws UsageError when invoked on a detected run.
int reconstruct_secret(const ProtocolOutcome& outcome);

} // namespace qss::protocol
