#include "motionkey/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "motionkey/errors.hpp"
#include "motionkey/rng.hpp"

namespace motionkey {

namespace {

double clamp_prob(double p) { return std::clamp(p, kProbClamp, 1.0 - kProbClamp); }

void check_dimensions(const BernoulliMixture& model, const std::vector<Bitstring>& data) {
    const std::size_t d = model.dim();
    for (const Bitstring& x : data) {
        if (x.size() != d) {
            throw LengthMismatch("bitstring length " + std::to_string(x.size()) +
                                 " does not match model dimension " + std::to_string(d));
        }
    }
}

// log p(x | component k), all probs pre-logged for speed.
struct LogProbTable {
    std::vector<double> log_p;    // K x D
    std::vector<double> log_q;    // K x D, log(1 - p)
    std::vector<double> log_w;    // K
    std::size_t k = 0;
    std::size_t d = 0;

    explicit LogProbTable(const BernoulliMixture& model)
        : k(model.components()), d(model.dim()) {
        log_p.resize(k * d);
        log_q.resize(k * d);
        log_w.resize(k);
        for (std::size_t c = 0; c < k; ++c) {
            log_w[c] = std::log(model.weights[c]);
            for (std::size_t j = 0; j < d; ++j) {
                log_p[c * d + j] = std::log(model.probs[c][j]);
                log_q[c * d + j] = std::log(1.0 - model.probs[c][j]);
            }
        }
    }

    double component_log_prob(std::size_t c, const Bitstring& x) const {
        double acc = log_w[c];
        const double* lp = log_p.data() + c * d;
        const double* lq = log_q.data() + c * d;
        for (std::size_t j = 0; j < d; ++j) {
            acc += x[j] ? lp[j] : lq[j];
        }
        return acc;
    }
};

double log_sum_exp(const std::vector<double>& values) {
    const double peak = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(peak)) return peak;
    double acc = 0.0;
    for (double v : values) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

}  // namespace

void BernoulliMixture::validate() const {
    if (weights.empty() || probs.size() != weights.size()) {
        throw InvalidModel("mixture needs K >= 1 components with matching prob rows");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidModel("weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidModel("weights must sum to 1, got " + std::to_string(total));
    }
    const std::size_t d = dim();
    if (d == 0) throw InvalidModel("model dimension must be at least 1");
    for (const auto& row : probs) {
        if (row.size() != d) throw InvalidModel("prob rows must share one dimension");
        for (double p : row) {
            if (!(p >= kProbClamp) || !(p <= 1.0 - kProbClamp)) {
                throw InvalidModel("per-bit probabilities must lie in the clamp range");
            }
        }
    }
}

double log_likelihood(const BernoulliMixture& model, const std::vector<Bitstring>& data) {
    model.validate();
    check_dimensions(model, data);
    const LogProbTable table(model);
    std::vector<double> component(model.components());
    double total = 0.0;
    for (const Bitstring& x : data) {
        for (std::size_t c = 0; c < table.k; ++c) {
            component[c] = table.component_log_prob(c, x);
        }
        total += log_sum_exp(component);
    }
    return total;
}

EmFitResult em_fit(const std::vector<Bitstring>& data, std::size_t k, std::uint64_t seed,
                   std::size_t max_iter, double tol) {
    if (k < 1) {
        throw InsufficientData("component count must be at least 1");
    }
    if (data.size() < k) {
        throw InsufficientData("EM needs at least K strings, got " + std::to_string(data.size()) +
                               " for K=" + std::to_string(k));
    }
    const std::size_t n = data.size();
    const std::size_t d = data.front().size();
    if (d == 0) {
        throw InsufficientData("bitstrings must be non-empty");
    }
    for (const Bitstring& x : data) {
        if (x.size() != d) {
            throw LengthMismatch("bitstrings must share one length");
        }
    }

    // Per-bit empirical means; every component starts at a jittered copy.
    std::vector<double> means(d, 0.0);
    for (const Bitstring& x : data) {
        for (std::size_t j = 0; j < d; ++j) means[j] += x[j];
    }
    for (double& m : means) m /= static_cast<double>(n);

    Rng rng(derive_seed(seed, 0x656d666974ULL));
    BernoulliMixture model;
    model.weights.assign(k, 1.0 / static_cast<double>(k));
    model.probs.assign(k, std::vector<double>(d));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t j = 0; j < d; ++j) {
            model.probs[c][j] = clamp_prob(means[j] + rng.uniform(-0.1, 0.1));
        }
    }

    EmFitResult result;
    std::vector<double> resp(n * k);
    std::vector<double> component(k);
    double previous = -std::numeric_limits<double>::infinity();

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        // E-step: responsibilities and the current log-likelihood.
        const LogProbTable table(model);
        double ll = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < k; ++c) {
                component[c] = table.component_log_prob(c, data[i]);
            }
            const double norm = log_sum_exp(component);
            ll += norm;
            for (std::size_t c = 0; c < k; ++c) {
                resp[i * k + c] = std::exp(component[c] - norm);
            }
        }
        result.log_likelihoods.push_back(ll);

        if (ll - previous < tol && iter > 0) {
            result.converged = true;
            break;
        }
        previous = ll;

        // M-step.
        for (std::size_t c = 0; c < k; ++c) {
            double weight_sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) weight_sum += resp[i * k + c];
            model.weights[c] = weight_sum / static_cast<double>(n);
            for (std::size_t j = 0; j < d; ++j) {
                double bit_sum = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (data[i][j]) bit_sum += resp[i * k + c];
                }
                model.probs[c][j] =
                    weight_sum > 0.0 ? clamp_prob(bit_sum / weight_sum) : clamp_prob(means[j]);
            }
        }
        // Weight renormalization guards against drift from the resp sums.
        double total = 0.0;
        for (double w : model.weights) total += w;
        for (double& w : model.weights) w /= total;
    }

    if (!result.converged) {
        // The loop ended on an M-step; record the likelihood of the final
        // parameters so final_log_likelihood() always describes the model.
        result.log_likelihoods.push_back(log_likelihood(model, data));
    }

    result.model = std::move(model);
    result.model.validate();
    return result;
}

double bic(const BernoulliMixture& model, const std::vector<Bitstring>& data) {
    model.validate();
    check_dimensions(model, data);
    if (data.empty()) {
        throw InsufficientData("BIC needs at least one string");
    }
    const auto k = static_cast<double>(model.components());
    const auto d = static_cast<double>(model.dim());
    const double params = (k - 1.0) + k * d;
    return log_likelihood(model, data) -
           0.5 * params * std::log(static_cast<double>(data.size()));
}

ModelSelection select_model(const std::vector<Bitstring>& data, std::size_t k_max,
                            std::size_t restarts, std::uint64_t seed) {
    if (k_max < 1) {
        throw InsufficientData("k_max must be at least 1");
    }
    if (restarts < 1) {
        throw InsufficientData("restarts must be at least 1");
    }
    if (data.empty()) {
        throw InsufficientData("model selection needs at least one string");
    }

    ModelSelection selection;
    bool have_best = false;
    double best_bic = 0.0;
    const std::size_t k_limit = std::min<std::size_t>(k_max, data.size());
    for (std::size_t k = 1; k <= k_limit; ++k) {
        EmFitResult best_fit;
        bool have_fit = false;
        for (std::size_t r = 0; r < restarts; ++r) {
            EmFitResult fit = em_fit(data, k, derive_seed(seed, k * 1000 + r));
            if (!have_fit || fit.final_log_likelihood() > best_fit.final_log_likelihood()) {
                best_fit = std::move(fit);
                have_fit = true;
            }
        }
        const double score = bic(best_fit.model, data);
        selection.candidates.push_back(
            {k, best_fit.final_log_likelihood(), score});
        if (!have_best || score > best_bic) {  // ties keep the smaller K
            have_best = true;
            best_bic = score;
            selection.model = std::move(best_fit.model);
            selection.selected_k = k;
        }
    }
    return selection;
}

EntropyEstimate estimate_entropy(const BernoulliMixture& model, std::size_t n_samples,
                                 std::uint64_t seed) {
    model.validate();
    if (n_samples < 1) {
        throw InsufficientData("entropy estimation needs at least one sample");
    }
    const std::size_t k = model.components();
    const std::size_t d = model.dim();
    const LogProbTable table(model);
    Rng rng(derive_seed(seed, 0x656e74726f7079ULL));

    // Cumulative weights for component sampling.
    std::vector<double> cumulative(k);
    double acc = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        acc += model.weights[c];
        cumulative[c] = acc;
    }
    cumulative.back() = 1.0;

    const double ln2 = std::numbers::ln2_v<double>;
    Bitstring x(d);
    std::vector<double> component(k);
    // Welford accumulation: exact zero variance for identical samples.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double u = rng.uniform01();
        std::size_t c = 0;
        while (c + 1 < k && u >= cumulative[c]) ++c;
        for (std::size_t j = 0; j < d; ++j) {
            x[j] = rng.bernoulli(model.probs[c][j]) ? 1 : 0;
        }
        for (std::size_t cc = 0; cc < k; ++cc) {
            component[cc] = table.component_log_prob(cc, x);
        }
        const double bits = -log_sum_exp(component) / ln2;
        const double delta = bits - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (bits - mean);
    }

    EntropyEstimate estimate;
    estimate.n_samples = n_samples;
    estimate.bits = mean;
    const auto n = static_cast<double>(n_samples);
    estimate.std_error = n_samples > 1 ? std::sqrt(std::max(0.0, m2 / (n - 1.0)) / n) : 0.0;
    return estimate;
}

}  // namespace motionkey
