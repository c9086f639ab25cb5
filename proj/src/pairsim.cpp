#include "motionkey/pairsim.hpp"

#include <utility>

#include "motionkey/errors.hpp"
#include "motionkey/matching.hpp"

namespace motionkey {

DeviceAgent::DeviceAgent(std::string id, AccelTrace trace, const PipelineConfig& config)
    : id_(std::move(id)), trace_(std::move(trace)), config_(config) {}

std::optional<Key> DeviceAgent::derive_own_key() {
    try {
        key_ = derive_key(trace_, config_);
    } catch (const Error& e) {
        key_.reset();
        diagnostic_ = e.what();
    }
    return key_;
}

PairingMessage DeviceAgent::compose_message(std::uint64_t session_id) const {
    PairingMessage msg;
    msg.session_id = session_id;
    msg.sender = id_;
    msg.key_bits = key_->to_string();
    msg.nb = key_->nb();
    return msg;
}

DeviceVerdict DeviceAgent::confirm(const PairingMessage& received, MatchMode mode,
                                   double agree_fraction) const {
    DeviceVerdict verdict;
    if (!key_) {
        verdict.diagnostic = diagnostic_.empty() ? "no local key" : diagnostic_;
        return verdict;
    }
    const Key peer_key = Key::from_string(received.key_bits, received.nb);
    verdict.paired = keys_match(*key_, peer_key, mode, agree_fraction);
    if (!verdict.paired) {
        verdict.diagnostic = "keys do not match";
    }
    return verdict;
}

PairingSession::PairingSession(AccelTrace trace1, AccelTrace trace2, const PipelineConfig& config,
                               MatchMode mode, double agree_fraction, std::uint64_t session_id)
    : agent1_("device1", std::move(trace1), config),
      agent2_("device2", std::move(trace2), config),
      mode_(mode),
      agree_fraction_(agree_fraction),
      session_id_(session_id) {}

PairingOutcome PairingSession::run() {
    // Each agent works purely locally; the recorded messages are the only
    // data that crosses between them.
    const std::optional<Key> key1 = agent1_.derive_own_key();
    const std::optional<Key> key2 = agent2_.derive_own_key();

    std::optional<PairingMessage> to_agent2;
    std::optional<PairingMessage> to_agent1;
    if (key1) {
        to_agent2 = agent1_.compose_message(session_id_);
        transcript_.push_back(*to_agent2);
    }
    if (key2) {
        to_agent1 = agent2_.compose_message(session_id_);
        transcript_.push_back(*to_agent1);
    }

    outcome_ = PairingOutcome{};
    outcome_.mode = mode_;
    outcome_.agree_fraction = agree_fraction_;
    if (to_agent1) {
        outcome_.device1 = agent1_.confirm(*to_agent1, mode_, agree_fraction_);
    } else {
        outcome_.device1 = {false, key1 ? "peer sent no key" : agent1_.failure_diagnostic()};
    }
    if (to_agent2) {
        outcome_.device2 = agent2_.confirm(*to_agent2, mode_, agree_fraction_);
    } else {
        outcome_.device2 = {false, key2 ? "peer sent no key" : agent2_.failure_diagnostic()};
    }
    if (key1 && key2) {
        outcome_.hamming = hamming_distance(*key1, *key2);
    }
    finished_ = true;
    return outcome_;
}

const std::vector<PairingMessage>& PairingSession::transcript() const {
    if (!finished_) {
        throw SessionNotFinished("transcript requested before the session ran");
    }
    return transcript_;
}

const PairingOutcome& PairingSession::outcome() const {
    if (!finished_) {
        throw SessionNotFinished("outcome requested before the session ran");
    }
    return outcome_;
}

PairingOutcome run_pairing_session(const AccelTrace& trace1, const AccelTrace& trace2,
                                   const PipelineConfig& config, MatchMode mode,
                                   double agree_fraction) {
    PairingSession session(trace1, trace2, config, mode, agree_fraction);
    return session.run();
}

}  // namespace motionkey
