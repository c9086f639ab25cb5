#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motionkey/pipeline.hpp"
#include "motionkey/signal.hpp"

namespace motionkey {

/// The only data that ever crosses the channel: identifiers and key bits.
/// No samples, no feature values.
struct PairingMessage {
    std::uint64_t session_id = 0;
    std::string sender;
    std::string key_bits;  // ASCII '0'/'1'
    unsigned nb = 0;
};

struct DeviceVerdict {
    bool paired = false;
    std::string diagnostic;  // set when the device could not pair
};

struct PairingOutcome {
    DeviceVerdict device1;
    DeviceVerdict device2;
    std::optional<std::size_t> hamming;  // present when both keys were derived
    MatchMode mode = MatchMode::strict;
    double agree_fraction = 1.0;

    bool paired() const { return device1.paired && device2.paired; }
};

/// One device of a pairing session. An agent owns its trace and the shared
/// static config and never sees anything of its peer beyond a
/// PairingMessage.
class DeviceAgent {
public:
    DeviceAgent(std::string id, AccelTrace trace, const PipelineConfig& config);

    const std::string& id() const { return id_; }

    /// Runs the local pipeline; failure is remembered as the diagnostic.
    std::optional<Key> derive_own_key();

    PairingMessage compose_message(std::uint64_t session_id) const;

    /// Local confirmation of a received message against this agent's own
    /// key.
    DeviceVerdict confirm(const PairingMessage& received, MatchMode mode, double agree_fraction) const;

    const std::string& failure_diagnostic() const { return diagnostic_; }

private:
    std::string id_;
    AccelTrace trace_;
    PipelineConfig config_;
    std::optional<Key> key_;
    std::string diagnostic_;
};

/// Two-device pairing with an in-process channel that records a transcript.
/// Execution is sequential and deterministic: device 1 computes and sends,
/// then device 2, then both confirm locally.
class PairingSession {
public:
    PairingSession(AccelTrace trace1, AccelTrace trace2, const PipelineConfig& config,
                   MatchMode mode, double agree_fraction, std::uint64_t session_id = 1);

    PairingOutcome run();

    bool finished() const { return finished_; }

    /// Full ordered message transcript; throws SessionNotFinished before
    /// run() completed.
    const std::vector<PairingMessage>& transcript() const;

    const PairingOutcome& outcome() const;

private:
    DeviceAgent agent1_;
    DeviceAgent agent2_;
    MatchMode mode_;
    double agree_fraction_;
    std::uint64_t session_id_;
    bool finished_ = false;
    std::vector<PairingMessage> transcript_;
    PairingOutcome outcome_;
};

PairingOutcome run_pairing_session(const AccelTrace& trace1, const AccelTrace& trace2,
                                   const PipelineConfig& config, MatchMode mode,
                                   double agree_fraction);

inline const std::vector<PairingMessage>& inspect_transcript(const PairingSession& session) {
    return session.transcript();
}

}  // namespace motionkey
