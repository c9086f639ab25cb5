#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "motionkey/dataset_io.hpp"
#include "motionkey/errors.hpp"
#include "motionkey/eval.hpp"
#include "motionkey/pairsim.hpp"
#include "motionkey/synth.hpp"
#include "support/util.hpp"

using namespace motionkey;

namespace {

PipelineConfig calibrated_config() {
    // shared static provisioning used by every session in this suite
    const SynthConfig synth;
    PairDataset dataset;
    dataset.positives = make_synth_positives(synth, 4, 8, 1234);
    PipelineConfig config;
    config.bounds = calibrate_dataset_bounds(dataset, config);
    return config;
}

const PipelineConfig& shared_config() {
    static const PipelineConfig config = calibrated_config();
    return config;
}

AccelTrace quiet_trace() {
    std::vector<TriAxialSample> samples;
    for (int i = 0; i < 600; ++i) samples.push_back({i / 100.0, 0.05, 0.05, 0.05});
    return AccelTrace(100.0, samples);
}

}  // namespace

TEST_CASE("identical traces pair in strict mode") {
    const SynthConfig synth;
    const auto [trace, other] = synth_shared_pair(synth, 5);
    (void)other;
    const PairingOutcome outcome =
        run_pairing_session(trace, trace, shared_config(), MatchMode::strict, 1.0);
    CHECK(outcome.paired());
    CHECK(outcome.device1.paired);
    CHECK(outcome.device2.paired);
    REQUIRE(outcome.hamming.has_value());
    CHECK(*outcome.hamming == 0);
}

TEST_CASE("independently shaken devices are denied in strict mode") {
    const SynthConfig synth;
    int denied = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto [a, b] = synth_independent_pair(synth, 5000 + seed);
        const PairingOutcome outcome =
            run_pairing_session(a, b, shared_config(), MatchMode::strict, 1.0);
        if (!outcome.paired()) ++denied;
    }
    CHECK(denied >= 95);  // measured: 100/100
}

TEST_CASE("a session exchanges exactly two messages, keys only") {
    const SynthConfig synth;
    const std::regex bits_only("^[01]+$");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto [a, b] = synth_shared_pair(synth, seed);
        PairingSession session(a, b, shared_config(), MatchMode::relaxed, 0.9, seed + 1);
        session.run();
        const auto& transcript = inspect_transcript(session);
        REQUIRE(transcript.size() == 2);
        CHECK(transcript[0].sender == "device1");
        CHECK(transcript[1].sender == "device2");
        for (const PairingMessage& msg : transcript) {
            CHECK(msg.session_id == seed + 1);
            CHECK(msg.nb == shared_config().nb);
            CHECK(msg.key_bits.size() == kFeatureCount * shared_config().nb);
            CHECK(std::regex_match(msg.key_bits, bits_only));
        }
    }
}

TEST_CASE("transcript payload length is independent of the trace length") {
    SynthConfig synth;
    synth.duration = 9.0;  // longer recording, same key length
    const auto [a, b] = synth_shared_pair(synth, 2);
    PairingSession session(a, b, shared_config(), MatchMode::relaxed, 0.9);
    session.run();
    for (const PairingMessage& msg : session.transcript()) {
        CHECK(msg.key_bits.size() == kFeatureCount * shared_config().nb);
    }
}

TEST_CASE("agents are autonomous: the peer's trace never affects the local key") {
    const SynthConfig synth;
    const auto [a, b] = synth_shared_pair(synth, 77);
    const auto [c, d] = synth_independent_pair(synth, 78);
    (void)d;

    PairingSession with_b(a, b, shared_config(), MatchMode::relaxed, 0.9);
    with_b.run();
    PairingSession with_c(a, c, shared_config(), MatchMode::relaxed, 0.9);
    with_c.run();

    REQUIRE(!with_b.transcript().empty());
    REQUIRE(!with_c.transcript().empty());
    CHECK(with_b.transcript()[0].sender == "device1");
    CHECK(with_c.transcript()[0].sender == "device1");
    CHECK(with_b.transcript()[0].key_bits == with_c.transcript()[0].key_bits);
}

TEST_CASE("both devices reach the same verdict under one mode and fraction") {
    const SynthConfig synth;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const bool shared = seed % 2 == 0;
        const auto [a, b] = shared ? synth_shared_pair(synth, seed)
                                   : synth_independent_pair(synth, seed);
        for (MatchMode mode : {MatchMode::strict, MatchMode::relaxed}) {
            const PairingOutcome outcome =
                run_pairing_session(a, b, shared_config(), mode, 0.9);
            REQUIRE(outcome.device1.paired == outcome.device2.paired);
        }
    }
}

TEST_CASE("a device that cannot derive a key denies the pairing") {
    const SynthConfig synth;
    const auto [good, other] = synth_shared_pair(synth, 9);
    (void)other;
    PairingSession session(good, quiet_trace(), shared_config(), MatchMode::relaxed, 0.9);
    const PairingOutcome outcome = session.run();
    CHECK_FALSE(outcome.paired());
    CHECK_FALSE(outcome.device1.paired);
    CHECK_FALSE(outcome.device2.paired);
    CHECK_FALSE(outcome.device2.diagnostic.empty());
    CHECK_FALSE(outcome.hamming.has_value());
    // only the healthy device put a message on the channel
    CHECK(session.transcript().size() == 1);
    CHECK(session.transcript()[0].sender == "device1");
}

TEST_CASE("transcript access before run is an error") {
    const SynthConfig synth;
    const auto [a, b] = synth_shared_pair(synth, 1);
    PairingSession session(a, b, shared_config(), MatchMode::strict, 1.0);
    CHECK_THROWS_AS(session.transcript(), SessionNotFinished);
    CHECK_THROWS_AS(session.outcome(), SessionNotFinished);
    session.run();
    CHECK_NOTHROW(session.transcript());
    CHECK(session.finished());
}

TEST_CASE("sequential sessions with the same inputs give identical outcomes") {
    const SynthConfig synth;
    const auto [a, b] = synth_shared_pair(synth, 31);
    const PairingOutcome first = run_pairing_session(a, b, shared_config(), MatchMode::relaxed, 0.9);
    const PairingOutcome second = run_pairing_session(a, b, shared_config(), MatchMode::relaxed, 0.9);
    CHECK(first.device1.paired == second.device1.paired);
    CHECK(first.device2.paired == second.device2.paired);
    CHECK(first.hamming == second.hamming);
}
