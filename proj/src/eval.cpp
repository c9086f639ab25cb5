#include "motionkey/eval.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "motionkey/errors.hpp"
#include "motionkey/rng.hpp"

namespace motionkey {

std::vector<NegativePair> build_negative_pairs(std::span<const PositivePair> positives,
                                               std::size_t count, std::uint64_t seed) {
    // Group recording indices by subject so draws are uniform over each
    // subject's recordings.
    std::map<int, std::vector<std::size_t>> by_subject;
    for (std::size_t i = 0; i < positives.size(); ++i) {
        by_subject[positives[i].subject_id].push_back(i);
    }
    if (by_subject.size() < 2) {
        throw InsufficientSubjects("negative pairs need at least 2 subjects, got " +
                                   std::to_string(by_subject.size()));
    }
    std::vector<int> subjects;
    subjects.reserve(by_subject.size());
    for (const auto& [id, _] : by_subject) subjects.push_back(id);

    Rng rng(derive_seed(seed, 0x6e65676174697665ULL));
    std::vector<NegativePair> negatives;
    negatives.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto a = rng.uniform_int(0, subjects.size() - 1);
        auto b = a;
        while (b == a) b = rng.uniform_int(0, subjects.size() - 1);
        const int subject_a = subjects[a];
        const int subject_b = subjects[b];
        const auto& recs_a = by_subject[subject_a];
        const auto& recs_b = by_subject[subject_b];
        const PositivePair& rec_a = positives[recs_a[rng.uniform_int(0, recs_a.size() - 1)]];
        const PositivePair& rec_b = positives[recs_b[rng.uniform_int(0, recs_b.size() - 1)]];
        negatives.push_back(NegativePair{rec_a.device1, rec_b.device2, subject_a, subject_b});
    }
    return negatives;
}

namespace {

// Runs both traces of a pair through the pipeline. Returns no value when a
// stage fails on either device; the caller skips the pair.
std::optional<bool> label_pair(const AccelTrace& a, const AccelTrace& b,
                               const PipelineConfig& config) {
    try {
        const Key key_a = derive_key(a, config);
        const Key key_b = derive_key(b, config);
        return keys_match(key_a, key_b, config.mode, config.agree_fraction);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

EvalResult evaluate(const PairDataset& dataset, const PipelineConfig& config) {
    EvalResult result;
    for (const PositivePair& pair : dataset.positives) {
        const auto matched = label_pair(pair.device1, pair.device2, config);
        if (!matched) {
            ++result.skipped_pairs;
        } else if (*matched) {
            ++result.matrix.tp;
        } else {
            ++result.matrix.fn;
        }
    }
    for (const NegativePair& pair : dataset.negatives) {
        const auto matched = label_pair(pair.device1, pair.device2, config);
        if (!matched) {
            ++result.skipped_pairs;
        } else if (*matched) {
            ++result.matrix.fp;
        } else {
            ++result.matrix.tn;
        }
    }
    return result;
}

double accuracy(const ConfusionMatrix& cm) {
    const std::uint64_t total = cm.total();
    if (total == 0) {
        throw EmptyMatrix("accuracy undefined on an empty confusion matrix");
    }
    return static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
}

double f1(const ConfusionMatrix& cm) {
    const std::uint64_t denom = 2 * cm.tp + cm.fp + cm.fn;
    if (denom == 0) {
        throw UndefinedF1("F1 undefined: 2TP + FP + FN is zero");
    }
    return static_cast<double>(2 * cm.tp) / static_cast<double>(denom);
}

FeatureBounds calibrate_dataset_bounds(const PairDataset& dataset, const PipelineConfig& base) {
    PipelineConfig raw = base;
    raw.kernel_size = 1;
    std::vector<NormSignal> signals;
    signals.reserve(dataset.positives.size());
    for (const PositivePair& pair : dataset.positives) {
        try {
            signals.push_back(preprocess_trace(pair.device1, raw));
        } catch (const Error&) {
            // Unusable recordings are excluded from calibration the same way
            // evaluate() skips them.
        }
    }
    return calibrate_bounds(signals, kDefaultBoundsMargin);
}

GridResult grid_search(const PairDataset& dataset, std::span<const unsigned> nb_values,
                       std::span<const std::size_t> ks_values, GridCriterion criterion,
                       MatchMode mode, const PipelineConfig& base) {
    if (nb_values.empty() || ks_values.empty()) {
        throw InvalidGrid("grid search needs non-empty nb and kernel-size grids");
    }

    GridResult result;
    result.bounds = calibrate_dataset_bounds(dataset, base);

    PipelineConfig config = base;
    config.bounds = result.bounds;
    config.mode = mode;

    bool have_best = false;
    double best_value = 0.0;
    for (unsigned nb : nb_values) {
        for (std::size_t ks : ks_values) {
            config.nb = nb;
            config.kernel_size = ks;
            const EvalResult eval = evaluate(dataset, config);
            GridCell cell;
            cell.nb = nb;
            cell.kernel_size = ks;
            cell.accuracy = accuracy(eval.matrix);
            cell.f1 = f1(eval.matrix);
            cell.skipped_pairs = eval.skipped_pairs;
            result.surface.push_back(cell);

            const double value = criterion == GridCriterion::accuracy ? cell.accuracy : cell.f1;
            const bool wins =
                !have_best || value > best_value ||
                (value == best_value && (cell.nb < result.best.nb ||
                                         (cell.nb == result.best.nb &&
                                          cell.kernel_size < result.best.kernel_size)));
            if (wins) {
                have_best = true;
                best_value = value;
                result.best = cell;
            }
        }
    }
    return result;
}

}  // namespace motionkey
