// motionkey command-line tool: synthetic shake datasets, device pairing
// simulation, pipeline evaluation, parameter grid search and key-strength
// estimation. Every randomized run records its seed in the emitted
// manifest; re-running with the same flags reproduces outputs bit-exactly.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motionkey/dataset_io.hpp"
#include "motionkey/entropy.hpp"
#include "motionkey/errors.hpp"
#include "motionkey/eval.hpp"
#include "motionkey/pairsim.hpp"
#include "motionkey/pipeline.hpp"
#include "motionkey/synth.hpp"

namespace {

using nlohmann::json;
using namespace motionkey;

constexpr const char* kArtifactVersion = "0.1.0";

// Seed of the built-in calibration corpus used by `pair` when no bounds
// file is supplied.
constexpr std::uint64_t kFallbackBoundsSeed = 0xCA11B7;

struct RunManifest {
    std::string subcommand;
    std::uint64_t seed = 0;
    json parameters;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    json to_json() const {
        return json{{"artifact_version", kArtifactVersion},
                    {"subcommand", subcommand},
                    {"seed", seed},
                    {"parameters", parameters},
                    {"inputs", inputs},
                    {"outputs", outputs}};
    }
};

// Pipeline flags shared by pair/evaluate/grid/entropy/features.
struct PipelineFlags {
    unsigned nb = 4;
    std::size_t kernel_size = 5;
    double threshold = 30.0;
    std::size_t skip = 20;
    std::size_t trim_len = 500;
    std::string mode = "relaxed";
    double agree_fraction = 0.9;
    std::string bounds_file;

    void attach(CLI::App& cmd, bool with_match = true) {
        cmd.add_option("--nb", nb, "Bits per feature (1-16)");
        cmd.add_option("--kernel-size", kernel_size, "Box filter width; 1 = raw");
        cmd.add_option("--threshold", threshold, "Bump detection threshold, m/s^2");
        cmd.add_option("--skip", skip, "Samples dropped after the bump");
        cmd.add_option("--trim-len", trim_len, "Samples kept for feature extraction");
        cmd.add_option("--bounds", bounds_file, "Feature bounds JSON file");
        if (with_match) {
            cmd.add_option("--mode", mode, "Match mode: strict or relaxed")
                ->check(CLI::IsMember({"strict", "relaxed"}));
            cmd.add_option("--agree-fraction", agree_fraction,
                           "Required agreeing-bit fraction in relaxed mode");
        }
    }

    PipelineConfig to_config() const {
        PipelineConfig config;
        config.nb = nb;
        config.kernel_size = kernel_size;
        config.bump_threshold = threshold;
        config.skip = skip;
        config.trim_len = trim_len;
        config.mode = parse_match_mode(mode);
        config.agree_fraction = agree_fraction;
        if (!bounds_file.empty()) {
            config.bounds = load_feature_bounds(bounds_file);
        }
        return config;
    }

    json to_json() const {
        return json{{"nb", nb},
                    {"kernel_size", kernel_size},
                    {"threshold", threshold},
                    {"skip", skip},
                    {"trim_len", trim_len},
                    {"mode", mode},
                    {"agree_fraction", agree_fraction},
                    {"bounds_file", bounds_file}};
    }
};

struct SynthFlags {
    double duration = 5.0;
    double sample_rate = 100.0;
    double freq_lo = 2.0;
    double freq_hi = 5.0;
    double amp_lo = 5.0;
    double amp_hi = 15.0;
    double noise = 0.5;
    double gain_jitter = 0.05;
    std::uint64_t sync_offset_max = 3;
    double bump = 40.0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--duration", duration, "Shake duration, seconds");
        cmd.add_option("--sample-rate", sample_rate, "Sample rate, Hz");
        cmd.add_option("--freq-lo", freq_lo, "Shake frequency range low end, Hz");
        cmd.add_option("--freq-hi", freq_hi, "Shake frequency range high end, Hz");
        cmd.add_option("--amp-lo", amp_lo, "Amplitude range low end, m/s^2");
        cmd.add_option("--amp-hi", amp_hi, "Amplitude range high end, m/s^2");
        cmd.add_option("--noise", noise, "Per-axis device noise std, m/s^2");
        cmd.add_option("--gain-jitter", gain_jitter, "Per-device gain jitter fraction");
        cmd.add_option("--sync-offset-max", sync_offset_max, "Max start offset, samples");
        cmd.add_option("--bump", bump, "Bump transient amplitude, m/s^2");
    }

    SynthConfig to_config() const {
        SynthConfig config;
        config.duration = duration;
        config.sample_rate = sample_rate;
        config.base_freq_range = {freq_lo, freq_hi};
        config.amp_range = {amp_lo, amp_hi};
        config.device_noise_std = noise;
        config.device_gain_jitter = gain_jitter;
        config.sync_offset_max = sync_offset_max;
        config.bump_amplitude = bump;
        return config;
    }

    json to_json() const {
        return json{{"duration", duration},
                    {"sample_rate", sample_rate},
                    {"base_freq_range", {freq_lo, freq_hi}},
                    {"amp_range", {amp_lo, amp_hi}},
                    {"device_noise_std", noise},
                    {"device_gain_jitter", gain_jitter},
                    {"sync_offset_max", sync_offset_max},
                    {"bump_amplitude", bump}};
    }
};

void emit(const json& doc, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::ofstream out(out_file, std::ios::trunc);
        if (!out) throw IoError("cannot open " + out_file + " for writing");
        out << doc.dump(2) << '\n';
    }
}

json matrix_json(const ConfusionMatrix& cm) {
    return json{{"tp", cm.tp}, {"fn", cm.fn}, {"fp", cm.fp}, {"tn", cm.tn}};
}

json features_json(const FeatureVector& fv) {
    const auto values = fv.as_array();
    json doc;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        doc[std::string(kFeatureNames[i])] = values[i];
    }
    return doc;
}

PairDataset load_dataset(const std::string& dir, std::size_t negatives, std::uint64_t seed) {
    PairDataset dataset;
    dataset.positives = load_positive_pairs(dir);
    const std::size_t count = negatives > 0 ? negatives : 2 * dataset.positives.size();
    dataset.negatives = build_negative_pairs(dataset.positives, count, seed);
    return dataset;
}

FeatureBounds fallback_bounds(const PipelineConfig& base) {
    PairDataset corpus;
    corpus.positives = make_synth_positives(SynthConfig{}, 4, 8, kFallbackBoundsSeed);
    return calibrate_dataset_bounds(corpus, base);
}

double safe_f1(const ConfusionMatrix& cm, bool& defined) {
    try {
        defined = true;
        return f1(cm);
    } catch (const UndefinedF1&) {
        defined = false;
        return 0.0;
    }
}

// ---------------------------------------------------------------------------

int cmd_synth(const std::string& out_dir, int subjects, int shakes, std::uint64_t seed,
              const std::string& pair_kind, const SynthFlags& flags) {
    const bool shared = pair_kind == "shared";
    const auto written =
        write_synth_dataset(out_dir, flags.to_config(), subjects, shakes, seed, shared);

    RunManifest manifest;
    manifest.subcommand = "synth";
    manifest.seed = seed;
    manifest.parameters = flags.to_json();
    manifest.parameters["subjects"] = subjects;
    manifest.parameters["shakes"] = shakes;
    manifest.parameters["pair_kind"] = pair_kind;
    manifest.parameters["out_dir"] = out_dir;
    for (const auto& path : written) manifest.outputs.push_back(path.string());

    const auto manifest_path = std::filesystem::path(out_dir) / "manifest.json";
    std::ofstream out(manifest_path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + manifest_path.string());
    out << manifest.to_json().dump(2) << '\n';

    std::cout << "wrote " << written.size() << " trace files and manifest.json to " << out_dir
              << '\n';
    return 0;
}

int cmd_features(const std::string& trace_file, bool no_sync, const PipelineFlags& flags,
                 const std::string& out_file) {
    const AccelTrace trace = load_trace_csv(trace_file);
    const PipelineConfig config = flags.to_config();

    NormSignal prepared = [&] {
        if (!no_sync) return preprocess_trace(trace, config);
        return box_filter(euclidean_norm(trace), config.kernel_size);
    }();
    const FeatureVector fv = extract_features(prepared);

    RunManifest manifest;
    manifest.subcommand = "features";
    manifest.parameters = flags.to_json();
    manifest.parameters["no_sync"] = no_sync;
    manifest.inputs.push_back(trace_file);
    if (!out_file.empty()) manifest.outputs.push_back(out_file);

    json doc{{"manifest", manifest.to_json()}, {"features", features_json(fv)}};
    if (!flags.bounds_file.empty()) {
        const NormalizedFeatureVector nfv = normalize_features(fv, config.bounds);
        json normalized;
        for (std::size_t i = 0; i < kFeatureCount; ++i) {
            normalized[std::string(kFeatureNames[i])] = nfv.values[i];
        }
        doc["normalized"] = normalized;
    }
    emit(doc, out_file);
    return 0;
}

int cmd_pair(const std::string& file_a, const std::string& file_b, const std::string& synth_kind,
             std::uint64_t seed, const PipelineFlags& flags, const SynthFlags& synth_flags,
             const std::string& out_file) {
    PipelineConfig config = flags.to_config();
    if (flags.bounds_file.empty()) {
        config.bounds = fallback_bounds(config);
    }

    RunManifest manifest;
    manifest.subcommand = "pair";
    manifest.seed = seed;
    manifest.parameters = flags.to_json();
    manifest.parameters["bounds_source"] =
        flags.bounds_file.empty() ? "builtin-calibration" : flags.bounds_file;

    auto [trace_a, trace_b] = [&]() -> std::pair<AccelTrace, AccelTrace> {
        if (!synth_kind.empty()) {
            manifest.parameters["synth"] = synth_kind;
            return synth_kind == "shared" ? synth_shared_pair(synth_flags.to_config(), seed)
                                          : synth_independent_pair(synth_flags.to_config(), seed);
        }
        manifest.inputs = {file_a, file_b};
        return {load_trace_csv(file_a), load_trace_csv(file_b)};
    }();

    PairingSession session(std::move(trace_a), std::move(trace_b), config,
                           config.mode, config.agree_fraction);
    const PairingOutcome outcome = session.run();

    json transcript = json::array();
    for (const PairingMessage& msg : session.transcript()) {
        transcript.push_back(json{{"session_id", msg.session_id},
                                  {"sender", msg.sender},
                                  {"nb", msg.nb},
                                  {"key_bits", msg.key_bits}});
    }

    json doc{{"manifest", manifest.to_json()},
             {"outcome",
              {{"device1", {{"paired", outcome.device1.paired},
                            {"diagnostic", outcome.device1.diagnostic}}},
               {"device2", {{"paired", outcome.device2.paired},
                            {"diagnostic", outcome.device2.diagnostic}}},
               {"paired", outcome.paired()},
               {"mode", std::string(to_string(outcome.mode))},
               {"agree_fraction", outcome.agree_fraction}}},
             {"transcript", transcript}};
    if (outcome.hamming) {
        doc["outcome"]["hamming_distance"] = *outcome.hamming;
    }
    emit(doc, out_file);
    // A denied pairing is a completed session; the verdict lives in the
    // report, not the exit code.
    return 0;
}

int cmd_evaluate(const std::string& data_dir, std::size_t negatives, std::uint64_t seed,
                 const PipelineFlags& flags, const std::string& bounds_out,
                 const std::string& out_file) {
    const PairDataset dataset = load_dataset(data_dir, negatives, seed);

    PipelineConfig config = flags.to_config();
    if (flags.bounds_file.empty()) {
        config.bounds = calibrate_dataset_bounds(dataset, config);
    }
    if (!bounds_out.empty()) {
        save_feature_bounds(bounds_out, config.bounds);
    }

    const EvalResult result = evaluate(dataset, config);

    RunManifest manifest;
    manifest.subcommand = "evaluate";
    manifest.seed = seed;
    manifest.parameters = flags.to_json();
    manifest.parameters["negatives"] = dataset.negatives.size();
    manifest.parameters["bounds_source"] =
        flags.bounds_file.empty() ? "calibrated-from-dataset" : flags.bounds_file;
    manifest.inputs.push_back(data_dir);
    if (!bounds_out.empty()) manifest.outputs.push_back(bounds_out);
    if (!out_file.empty()) manifest.outputs.push_back(out_file);

    bool f1_defined = false;
    const double f1_value = safe_f1(result.matrix, f1_defined);
    json doc{{"manifest", manifest.to_json()},
             {"dataset",
              {{"positives", dataset.positives.size()}, {"negatives", dataset.negatives.size()}}},
             {"confusion_matrix", matrix_json(result.matrix)},
             {"accuracy", accuracy(result.matrix)},
             {"f1", f1_defined ? json(f1_value) : json(nullptr)},
             {"skipped_pairs", result.skipped_pairs}};
    emit(doc, out_file);
    return 0;
}

int cmd_grid(const std::string& data_dir, std::size_t negatives, std::uint64_t seed,
             std::vector<unsigned> nb_values, std::vector<std::size_t> ks_values,
             const std::string& criterion_name, const PipelineFlags& flags,
             const std::string& surface_out, const std::string& out_file) {
    const PairDataset dataset = load_dataset(data_dir, negatives, seed);
    const GridCriterion criterion =
        criterion_name == "f1" ? GridCriterion::f1 : GridCriterion::accuracy;

    const PipelineConfig base = flags.to_config();
    const GridResult grid =
        grid_search(dataset, nb_values, ks_values, criterion, base.mode, base);

    if (!surface_out.empty()) {
        std::ofstream out(surface_out, std::ios::trunc);
        if (!out) throw IoError("cannot open " + surface_out + " for writing");
        out << "nb,ks,accuracy,f1\n";
        char row[128];
        for (const GridCell& cell : grid.surface) {
            std::snprintf(row, sizeof(row), "%u,%zu,%.17g,%.17g\n", cell.nb, cell.kernel_size,
                          cell.accuracy, cell.f1);
            out << row;
        }
    }

    RunManifest manifest;
    manifest.subcommand = "grid";
    manifest.seed = seed;
    manifest.parameters = flags.to_json();
    manifest.parameters["negatives"] = dataset.negatives.size();
    manifest.parameters["criterion"] = criterion_name;
    manifest.parameters["nb_values"] = nb_values;
    manifest.parameters["ks_values"] = ks_values;
    manifest.inputs.push_back(data_dir);
    if (!surface_out.empty()) manifest.outputs.push_back(surface_out);
    if (!out_file.empty()) manifest.outputs.push_back(out_file);

    json doc{{"manifest", manifest.to_json()},
             {"best",
              {{"nb", grid.best.nb},
               {"ks", grid.best.kernel_size},
               {"accuracy", grid.best.accuracy},
               {"f1", grid.best.f1}}},
             {"cells", grid.surface.size()}};
    emit(doc, out_file);
    return 0;
}

int cmd_entropy(const std::string& keys_file, const std::string& data_dir, std::size_t k_max,
                std::size_t restarts, std::size_t samples, std::uint64_t seed,
                const PipelineFlags& flags, const std::string& out_file) {
    std::vector<Bitstring> keys;
    std::size_t skipped = 0;

    RunManifest manifest;
    manifest.subcommand = "entropy";
    manifest.seed = seed;
    manifest.parameters = flags.to_json();
    manifest.parameters["k_max"] = k_max;
    manifest.parameters["restarts"] = restarts;
    manifest.parameters["samples"] = samples;

    if (!keys_file.empty()) {
        manifest.inputs.push_back(keys_file);
        std::ifstream in(keys_file);
        if (!in) throw IoError("cannot open " + keys_file);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            Bitstring bits;
            bits.reserve(line.size());
            for (char c : line) {
                if (c != '0' && c != '1') throw InvalidKey("keys file must hold '0'/'1' lines");
                bits.push_back(static_cast<std::uint8_t>(c - '0'));
            }
            keys.push_back(std::move(bits));
        }
    } else {
        manifest.inputs.push_back(data_dir);
        const auto positives = load_positive_pairs(data_dir);
        PipelineConfig config = flags.to_config();
        if (flags.bounds_file.empty()) {
            PairDataset dataset;
            dataset.positives = positives;
            config.bounds = calibrate_dataset_bounds(dataset, config);
        }
        for (const PositivePair& pair : positives) {
            for (const AccelTrace* trace : {&pair.device1, &pair.device2}) {
                try {
                    keys.push_back(derive_key(*trace, config).bits());
                } catch (const Error&) {
                    ++skipped;
                }
            }
        }
    }
    if (keys.size() < 2) {
        throw InsufficientData("entropy estimation needs at least 2 keys");
    }

    const ModelSelection selection = select_model(keys, k_max, restarts, seed);
    const EntropyEstimate estimate = estimate_entropy(selection.model, samples, seed);

    json bic_table = json::array();
    for (const auto& c : selection.candidates) {
        bic_table.push_back(
            json{{"k", c.k}, {"log_likelihood", c.log_likelihood}, {"bic", c.bic}});
    }
    if (!out_file.empty()) manifest.outputs.push_back(out_file);

    json doc{{"manifest", manifest.to_json()},
             {"num_keys", keys.size()},
             {"key_length", keys.front().size()},
             {"skipped_traces", skipped},
             {"selected_k", selection.selected_k},
             {"bic_table", bic_table},
             {"entropy_bits", estimate.bits},
             {"std_error", estimate.std_error},
             {"mc_samples", estimate.n_samples}};
    emit(doc, out_file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shared-motion key generation pipeline and evaluation harness"};
    app.require_subcommand(1);

    // synth ------------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "Generate a synthetic shake dataset as CSV files");
    std::string out_dir;
    int subjects = 10;
    int shakes = 15;
    std::uint64_t synth_seed = 0;
    std::string pair_kind = "shared";
    SynthFlags synth_flags;
    synth->add_option("--out-dir", out_dir, "Output directory")->required();
    synth->add_option("--subjects", subjects, "Number of subjects");
    synth->add_option("--shakes", shakes, "Recordings per subject");
    synth->add_option("--seed", synth_seed, "Master seed");
    synth->add_option("--pair-kind", pair_kind, "shared or independent pairs")
        ->check(CLI::IsMember({"shared", "independent"}));
    synth_flags.attach(*synth);

    // features ----------------------------------------------------------
    auto* features = app.add_subcommand("features", "Extract the feature vector of one trace CSV");
    std::string trace_file;
    bool no_sync = false;
    PipelineFlags feature_flags;
    std::string features_out;
    features->add_option("trace", trace_file, "Trace CSV file")->required();
    features->add_flag("--no-sync", no_sync, "Skip bump synchronization and trimming");
    feature_flags.attach(*features, /*with_match=*/false);
    features->add_option("--out", features_out, "Write the JSON report here instead of stdout");

    // pair ----------------------------------------------------------------
    auto* pair = app.add_subcommand("pair", "Run one two-device pairing session");
    std::string file_a, file_b, pair_synth;
    std::uint64_t pair_seed = 1;
    PipelineFlags pair_flags;
    SynthFlags pair_synth_flags;
    std::string pair_out;
    pair->add_option("--a", file_a, "Device 1 trace CSV");
    pair->add_option("--b", file_b, "Device 2 trace CSV");
    pair->add_option("--synth", pair_synth, "Generate the pair instead: shared or independent")
        ->check(CLI::IsMember({"shared", "independent"}));
    pair->add_option("--seed", pair_seed, "Seed for --synth");
    pair_flags.attach(*pair);
    pair_synth_flags.attach(*pair);
    pair->add_option("--out", pair_out, "Write the JSON report here instead of stdout");

    // evaluate -----------------------------------------------------------
    auto* evaluate = app.add_subcommand("evaluate", "Confusion matrix, accuracy and F1 on a dataset");
    std::string eval_dir;
    std::size_t eval_negatives = 0;
    std::uint64_t eval_seed = 0;
    PipelineFlags eval_flags;
    std::string eval_bounds_out, eval_out;
    evaluate->add_option("--data", eval_dir, "Dataset directory (subjNN_shakeMM_devD.csv)")
        ->required();
    evaluate->add_option("--negatives", eval_negatives,
                         "Negative pair count (default: 2x positives)");
    evaluate->add_option("--seed", eval_seed, "Seed for negative pair sampling");
    eval_flags.attach(*evaluate);
    evaluate->add_option("--bounds-out", eval_bounds_out, "Save the calibrated bounds here");
    evaluate->add_option("--out", eval_out, "Write the JSON report here instead of stdout");

    // grid ----------------------------------------------------------------
    auto* grid = app.add_subcommand("grid", "Exhaustive (nb, kernel-size) grid search");
    std::string grid_dir;
    std::size_t grid_negatives = 0;
    std::uint64_t grid_seed = 0;
    std::vector<unsigned> nb_values = {1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::size_t> ks_values = {1, 5, 10, 15, 20, 25, 30, 40, 50};
    std::string criterion = "accuracy";
    PipelineFlags grid_flags;
    std::string surface_out, grid_out;
    grid->add_option("--data", grid_dir, "Dataset directory")->required();
    grid->add_option("--negatives", grid_negatives, "Negative pair count (default: 2x positives)");
    grid->add_option("--seed", grid_seed, "Seed for negative pair sampling");
    grid->add_option("--nb-values", nb_values, "nb grid")->delimiter(',');
    grid->add_option("--ks-values", ks_values, "kernel-size grid")->delimiter(',');
    grid->add_option("--criterion", criterion, "accuracy or f1")
        ->check(CLI::IsMember({"accuracy", "f1"}));
    grid_flags.attach(*grid);
    grid->add_option("--surface-out", surface_out, "Write the nb,ks,accuracy,f1 surface CSV here");
    grid->add_option("--out", grid_out, "Write the best-config JSON here instead of stdout");

    // entropy --------------------------------------------------------------
    auto* entropy = app.add_subcommand("entropy", "Bernoulli-mixture key-strength estimate");
    std::string keys_file, entropy_dir;
    std::size_t k_max = 10, restarts = 5, samples = 100000;
    std::uint64_t entropy_seed = 0;
    PipelineFlags entropy_flags;
    std::string entropy_out;
    entropy->add_option("--keys", keys_file, "Keys file: one ASCII bitstring per line");
    entropy->add_option("--data", entropy_dir, "Dataset directory to derive keys from");
    entropy->add_option("--k-max", k_max, "Largest mixture size tried");
    entropy->add_option("--restarts", restarts, "EM restarts per mixture size");
    entropy->add_option("--samples", samples, "Monte-Carlo sample count");
    entropy->add_option("--seed", entropy_seed, "Seed for EM init and sampling");
    entropy_flags.attach(*entropy, /*with_match=*/false);
    entropy->add_option("--out", entropy_out, "Write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            return cmd_synth(out_dir, subjects, shakes, synth_seed, pair_kind, synth_flags);
        }
        if (features->parsed()) {
            return cmd_features(trace_file, no_sync, feature_flags, features_out);
        }
        if (pair->parsed()) {
            if (pair_synth.empty() && (file_a.empty() || file_b.empty())) {
                std::cerr << "pair: provide --a and --b, or --synth\n";
                return 1;
            }
            return cmd_pair(file_a, file_b, pair_synth, pair_seed, pair_flags, pair_synth_flags,
                            pair_out);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(eval_dir, eval_negatives, eval_seed, eval_flags, eval_bounds_out,
                                eval_out);
        }
        if (grid->parsed()) {
            return cmd_grid(grid_dir, grid_negatives, grid_seed, nb_values, ks_values, criterion,
                            grid_flags, surface_out, grid_out);
        }
        if (entropy->parsed()) {
            if (keys_file.empty() && entropy_dir.empty()) {
                std::cerr << "entropy: provide --keys or --data\n";
                return 1;
            }
            return cmd_entropy(keys_file, entropy_dir, k_max, restarts, samples, entropy_seed,
                               entropy_flags, entropy_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
