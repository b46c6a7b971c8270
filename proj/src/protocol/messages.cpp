#include "qss/protocol/messages.hpp"

#include "qss/errors.hpp"

namespace qss::protocol {

const char* to_string(PartyId p) {
    switch (p) {
        case PartyId::Alice:   return "alice";
        case PartyId::Bob:     return "bob";
        case PartyId::Charlie: return "charlie";
        case PartyId::Diana:   return "diana";
    }
    return "?";
}

int receiver_index(PartyId p) {
    switch (p) {
        case PartyId::Bob:     return 0;
        case PartyId::Charlie: return 1;
        case PartyId::Diana:   return 2;
        case PartyId::Alice:   break;
    }
    throw UsageError("receiver_index: Alice is not a receiver");
}

namespace {

std::string join_positions(const std::vector<int>& positions) {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(positions[i]);
    }
    return out;
}

struct Formatter {
    std::string operator()(const QubitSend& m) const {
        return std::string("QubitSend to=") + to_string(m.to) +
               " position=" + std::to_string(m.position);
    }
    std::string operator()(const Ack& m) const {
        return std::string("Ack from=") + to_string(m.from) +
               " position=" + std::to_string(m.position);
    }
    std::string operator()(const ObservableAnnouncement& m) const {
        std::string out = "ObservableAnnouncement";
        for (PartyId p : {PartyId::Alice, PartyId::Bob, PartyId::Charlie, PartyId::Diana}) {
            if (m.for_party(p).empty()) continue;
            out += std::string(" ") + to_string(p) + "=";
            for (PauliObservable obs : m.for_party(p)) out += observable_char(obs);
        }
        return out;
    }
    std::string operator()(const CheckRequest& m) const {
        std::string out = "CheckRequest";
        for (PartyId p : kReceivers)
            out += std::string(" ") + to_string(p) + "=" + join_positions(m.for_party(p));
        return out;
    }
    std::string operator()(const ResultAnnouncement& m) const {
        return std::string("ResultAnnouncement from=") + to_string(m.from) +
               " position=" + std::to_string(m.position) + " bit=" + std::to_string(m.bit);
    }
    std::string operator()(const RevealPositions& m) const {
        return "RevealPositions bob=" + std::to_string(m.bob_position) +
               " charlie=" + std::to_string(m.charlie_position) +
               " diana=" + std::to_string(m.diana_position);
    }
};

} // namespace

std::string format_message(const Message& msg) {
    return std::visit(Formatter{}, msg);
}

std::string export_transcript(const std::vector<Message>& transcript) {
    std::string out;
    for (const Message& m : transcript) {
        out += format_message(m);
        out += "\n";
    }
    return out;
}

} // namespace qss::protocol
