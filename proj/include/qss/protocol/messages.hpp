// Classical protocol messages and their transcript text form.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qss/pauli.hpp"

namespace qss::protocol {

enum class PartyId : std::uint8_t { Alice, Bob, Charlie, Diana };

inline constexpr std::array<PartyId, 3> kReceivers{PartyId::Bob, PartyId::Charlie,
                                                   PartyId::Diana};

const char* to_string(PartyId p);
int receiver_index(PartyId p);  // Bob = 0, Charlie = 1, Diana = 2

// Positions are 1-based in messages, matching the transcript format.
struct QubitSend {
    PartyId to;
    int position;
};

struct Ack {
    PartyId from;
    int position;
};

// Observable per transmission position. In the secure variant Alice dictates
// the receivers' observables and her own slot stays empty; in the original
// variant every party (Alice included) reports its own choice, indexed by
// copy.
struct ObservableAnnouncement {
    std::array<std::vector<PauliObservable>, 4> per_party;  // index = PartyId
    std::vector<PauliObservable>& for_party(PartyId p) {
        return per_party[static_cast<std::size_t>(p)];
    }
    const std::vector<PauliObservable>& for_party(PartyId p) const {
        return per_party[static_cast<std::size_t>(p)];
    }
};

struct CheckRequest {
    std::array<std::vector<int>, 3> positions;  // ascending, per receiver
    const std::vector<int>& for_party(PartyId p) const {
        return positions[static_cast<std::size_t>(receiver_index(p))];
    }
};

struct ResultAnnouncement {
    PartyId from;
    int position;
    int bit;
};

struct RevealPositions {
    int bob_position;
    int charlie_position;
    int diana_position;
};

using Message = std::variant<QubitSend, Ack, ObservableAnnouncement, CheckRequest,
                             ResultAnnouncement, RevealPositions>;

// One line per message: tag followed by "key=value" fields.
std::string format_message(const Message& msg);
std::string export_transcript(const std::vector<Message>& transcript);

} // namespace qss::protocol
