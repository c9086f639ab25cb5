#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "motionkey/pipeline.hpp"
#include "motionkey/signal.hpp"

namespace motionkey {

/// One shared-motion recording: the same shake seen by both devices.
struct PositivePair {
    AccelTrace device1;
    AccelTrace device2;
    int subject_id = 0;
    int shake_index = 0;
};

/// Device-1 trace of one subject paired with the device-2 trace of a
/// different subject.
struct NegativePair {
    AccelTrace device1;
    AccelTrace device2;
    int subject_a = 0;
    int subject_b = 0;
};

struct PairDataset {
    std::vector<PositivePair> positives;
    std::vector<NegativePair> negatives;
};

/// Positives on the first row: tp | fn / fp | tn.
struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fn = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fn + fp + tn; }
    bool operator==(const ConfusionMatrix&) const = default;
};

struct EvalResult {
    ConfusionMatrix matrix;
    std::size_t skipped_pairs = 0;  // pairs dropped because a stage failed
};

/// Draws `count` negative pairs: two distinct subject ids uniformly at
/// random, then one recording of each (device-1 trace from the first
/// subject, device-2 trace from the second). Deterministic given seed.
/// Throws InsufficientSubjects when the positives cover fewer than 2
/// subjects.
std::vector<NegativePair> build_negative_pairs(std::span<const PositivePair> positives,
                                               std::size_t count, std::uint64_t seed);

/// Runs both traces of every pair through the device pipeline independently
/// and labels the pair with the configured match predicate. Pairs on which
/// any stage fails are skipped and counted instead of aborting the run.
EvalResult evaluate(const PairDataset& dataset, const PipelineConfig& config);

/// (TP + TN) / (TP + TN + FP + FN). Throws EmptyMatrix when the matrix has
/// no counts.
double accuracy(const ConfusionMatrix& cm);

/// 2TP / (2TP + FP + FN). Throws UndefinedF1 when the denominator is zero.
double f1(const ConfusionMatrix& cm);

enum class GridCriterion { accuracy, f1 };

struct GridCell {
    unsigned nb = 0;
    std::size_t kernel_size = 0;
    double accuracy = 0.0;
    double f1 = 0.0;
    std::size_t skipped_pairs = 0;
};

struct GridResult {
    GridCell best;
    std::vector<GridCell> surface;  // one entry per (nb, ks), nb-major
    FeatureBounds bounds;           // the calibration shared by all cells
};

/// Normalization bounds for a dataset: features of every device-1 trace,
/// preprocessed with kernel_size 1 (the unfiltered signal), min/max widened
/// by kDefaultBoundsMargin. Every grid cell reuses this one calibration.
FeatureBounds calibrate_dataset_bounds(const PairDataset& dataset, const PipelineConfig& base);

/// Exhaustive sweep over nb_values x ks_values. Every cell is a full
/// evaluate() run with only (nb, kernel_size) varied from `base`; bounds
/// are calibrated once. The best cell maximizes the criterion, ties broken
/// by smaller nb, then smaller kernel_size. Throws InvalidGrid on empty
/// grids.
GridResult grid_search(const PairDataset& dataset, std::span<const unsigned> nb_values,
                       std::span<const std::size_t> ks_values, GridCriterion criterion,
                       MatchMode mode, const PipelineConfig& base);

}  // namespace motionkey
