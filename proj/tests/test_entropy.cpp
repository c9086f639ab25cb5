#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "motionkey/entropy.hpp"
#include "motionkey/errors.hpp"
#include "motionkey/rng.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace motionkey;

namespace {

BernoulliMixture uniform_model(std::size_t d) {
    BernoulliMixture model;
    model.weights = {1.0};
    model.probs = {std::vector<double>(d, 0.5)};
    return model;
}

std::vector<Bitstring> random_bitstrings(Rng& rng, std::size_t n, std::size_t d) {
    std::vector<Bitstring> data(n, Bitstring(d));
    for (auto& x : data) {
        for (auto& b : x) b = rng.bernoulli(rng.uniform(0.1, 0.9)) ? 1 : 0;
    }
    return data;
}

std::vector<Bitstring> two_cluster_corpus(std::uint64_t seed, std::size_t n, std::size_t d) {
    Rng rng(derive_seed(seed, 777));
    std::vector<Bitstring> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = rng.bernoulli(0.5) ? 0.05 : 0.95;
        Bitstring key(d);
        for (auto& bit : key) bit = rng.bernoulli(p) ? 1 : 0;
        keys.push_back(std::move(key));
    }
    return keys;
}

}  // namespace

TEST_CASE("log_likelihood of the uniform single component") {
    const BernoulliMixture model = uniform_model(40);
    const std::vector<Bitstring> one_key = {Bitstring(40, 1)};
    CHECK(log_likelihood(model, one_key) ==
          doctest::Approx(40.0 * std::log(0.5)).epsilon(1e-12));
}

TEST_CASE("log_likelihood of a near-deterministic component") {
    BernoulliMixture model;
    model.weights = {1.0};
    model.probs = {std::vector<double>(40, 1.0 - kProbClamp)};
    const std::vector<Bitstring> matching = {Bitstring(40, 1)};
    CHECK(log_likelihood(model, matching) ==
          doctest::Approx(40.0 * std::log1p(-kProbClamp)).epsilon(1e-9));
}

TEST_CASE("log_likelihood matches the direct product oracle at small D") {
    Rng rng(601);
    for (int round = 0; round < 100; ++round) {
        const std::size_t k = 1 + rng.uniform_int(0, 3);
        const std::size_t d = 1 + rng.uniform_int(0, 19);
        BernoulliMixture model;
        model.weights.assign(k, 0.0);
        double total = 0.0;
        for (auto& w : model.weights) {
            w = rng.uniform(0.1, 1.0);
            total += w;
        }
        for (auto& w : model.weights) w /= total;
        model.probs.assign(k, std::vector<double>(d));
        for (auto& row : model.probs) {
            for (auto& p : row) p = rng.uniform(0.05, 0.95);
        }
        const std::vector<Bitstring> data = random_bitstrings(rng, 20, d);

        double expected = 0.0;
        for (const Bitstring& x : data) {
            expected += std::log(oracles::mixture_likelihood(model.weights, model.probs, x));
        }
        REQUIRE(testutil::approx_rel(log_likelihood(model, data), expected, 1e-6));
    }
}

TEST_CASE("log_likelihood rejects mismatched lengths") {
    const BernoulliMixture model = uniform_model(8);
    CHECK_THROWS_AS(log_likelihood(model, {Bitstring(7, 0)}), LengthMismatch);
}

TEST_CASE("em_fit with K=1 reaches the per-bit empirical means") {
    Rng rng(602);
    const std::vector<Bitstring> data = random_bitstrings(rng, 60, 16);
    const EmFitResult fit = em_fit(data, 1, 9);
    CHECK(fit.converged);
    CHECK(fit.model.weights.size() == 1);
    CHECK(fit.model.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 0; j < 16; ++j) {
        double mean = 0.0;
        for (const Bitstring& x : data) mean += x[j];
        mean /= static_cast<double>(data.size());
        const double expected = std::clamp(mean, kProbClamp, 1.0 - kProbClamp);
        REQUIRE(fit.model.probs[0][j] == doctest::Approx(expected).epsilon(1e-12));
    }
    // the first M-step already lands on the optimum
    CHECK(fit.log_likelihoods.size() <= 3);
}

TEST_CASE("em_fit log-likelihood is monotone non-decreasing") {
    Rng rng(603);
    for (std::uint64_t round = 0; round < 20; ++round) {
        const std::size_t n = 30 + rng.uniform_int(0, 70);
        const std::size_t d = 5 + rng.uniform_int(0, 25);
        const std::vector<Bitstring> data = random_bitstrings(rng, n, d);
        const std::size_t k = 1 + rng.uniform_int(0, 3);
        const EmFitResult fit = em_fit(data, k, round);
        for (std::size_t i = 1; i < fit.log_likelihoods.size(); ++i) {
            REQUIRE(fit.log_likelihoods[i] >= fit.log_likelihoods[i - 1] - 1e-9);
        }
    }
}

TEST_CASE("em_fit validates its inputs") {
    Rng rng(604);
    const std::vector<Bitstring> data = random_bitstrings(rng, 5, 8);
    CHECK_THROWS_AS(em_fit(data, 6, 1), InsufficientData);
    CHECK_THROWS_AS(em_fit(data, 0, 1), InsufficientData);
    CHECK_THROWS_AS(em_fit({}, 1, 1), InsufficientData);
    std::vector<Bitstring> ragged = data;
    ragged.push_back(Bitstring(3, 0));
    CHECK_THROWS_AS(em_fit(ragged, 1, 1), LengthMismatch);
}

TEST_CASE("em_fit recovers two well-separated components") {
    const std::vector<Bitstring> keys = two_cluster_corpus(0, 500, 40);
    EmFitResult best;
    for (std::size_t r = 0; r < 3; ++r) {
        EmFitResult fit = em_fit(keys, 2, derive_seed(0, 200 + r));
        if (r == 0 || fit.final_log_likelihood() > best.final_log_likelihood()) {
            best = std::move(fit);
        }
    }
    // align labels by the first bit and check per-bit recovery
    const bool flipped = best.model.probs[0][0] > best.model.probs[1][0];
    const auto& low = best.model.probs[flipped ? 1 : 0];
    const auto& high = best.model.probs[flipped ? 0 : 1];
    for (std::size_t j = 0; j < 40; ++j) {
        REQUIRE(std::abs(low[j] - 0.05) <= 0.05);
        REQUIRE(std::abs(high[j] - 0.95) <= 0.05);
    }
    CHECK(best.model.weights[0] == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("fitted models keep weights on the simplex and probs clamped") {
    Rng rng(605);
    for (std::uint64_t round = 0; round < 10; ++round) {
        const std::vector<Bitstring> data = random_bitstrings(rng, 50, 12);
        const EmFitResult fit = em_fit(data, 3, round);
        double total = 0.0;
        for (double w : fit.model.weights) {
            REQUIRE(w >= 0.0);
            total += w;
        }
        REQUIRE(total == doctest::Approx(1.0).epsilon(1e-9));
        for (const auto& row : fit.model.probs) {
            for (double p : row) {
                REQUIRE(p >= kProbClamp);
                REQUIRE(p <= 1.0 - kProbClamp);
            }
        }
    }
}

TEST_CASE("bic hand arithmetic at K=1, D=1, n=2") {
    const std::vector<Bitstring> data = {{1}, {1}};
    const EmFitResult fit = em_fit(data, 1, 1);
    CHECK(fit.model.probs[0][0] == doctest::Approx(1.0 - kProbClamp).epsilon(1e-12));
    const double ll = log_likelihood(fit.model, data);
    CHECK(ll == doctest::Approx(2.0 * std::log1p(-kProbClamp)).epsilon(1e-9));
    // params = (K-1) + K*D = 1
    CHECK(bic(fit.model, data) == doctest::Approx(ll - 0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("duplicating a component never increases BIC") {
    Rng rng(606);
    for (int round = 0; round < 20; ++round) {
        const std::vector<Bitstring> data = random_bitstrings(rng, 40, 10);
        const EmFitResult fit = em_fit(data, 2, 11);
        const double base = bic(fit.model, data);

        BernoulliMixture duplicated = fit.model;
        duplicated.weights.push_back(duplicated.weights[0] / 2.0);
        duplicated.weights[0] /= 2.0;
        duplicated.probs.push_back(duplicated.probs[0]);
        const double split = bic(duplicated, data);
        REQUIRE(split <= base + 1e-9);
    }
}

TEST_CASE("select_model picks K=1 for structureless corpora") {
    const std::vector<Bitstring> constant(50, Bitstring(12, 1));
    const ModelSelection sel = select_model(constant, 4, 2, 5);
    CHECK(sel.selected_k == 1);

    Rng rng(607);
    const ModelSelection k1 = select_model(random_bitstrings(rng, 30, 10), 1, 2, 5);
    CHECK(k1.selected_k == 1);
    CHECK(k1.candidates.size() == 1);
}

TEST_CASE("select_model picks K=2 on the two-cluster corpus") {
    const std::vector<Bitstring> keys = two_cluster_corpus(1, 500, 40);
    const ModelSelection sel = select_model(keys, 4, 3, 13);
    CHECK(sel.selected_k == 2);
    CHECK(sel.candidates.size() == 4);
    // the reported BIC table is consistent with the selection
    for (const auto& c : sel.candidates) {
        if (c.k != sel.selected_k) {
            CHECK(c.bic <= sel.candidates[sel.selected_k - 1].bic);
        }
    }
}

TEST_CASE("estimate_entropy of the uniform 40-bit model is 40 bits with zero variance") {
    const EntropyEstimate est = estimate_entropy(uniform_model(40), 10000, 3);
    CHECK(est.bits == doctest::Approx(40.0).epsilon(1e-9));
    CHECK(est.std_error == 0.0);
}

TEST_CASE("estimate_entropy of a near-deterministic model is close to zero") {
    BernoulliMixture model;
    model.weights = {1.0};
    model.probs = {std::vector<double>(40, kProbClamp)};
    const EntropyEstimate est = estimate_entropy(model, 100000, 4);
    // rare opposite draws dominate the estimate; the analytic entropy is
    // 40*h2(1e-6) ~ 8.5e-4 bits
    CHECK(est.bits >= 0.0);
    CHECK(est.bits <= 1e-2);
}

TEST_CASE("estimate_entropy matches the analytic independent-bit entropy") {
    Rng rng(608);
    for (int round = 0; round < 20; ++round) {
        const std::size_t d = 40;
        BernoulliMixture model;
        model.weights = {1.0};
        model.probs = {std::vector<double>(d)};
        double analytic = 0.0;
        for (auto& p : model.probs[0]) {
            p = rng.uniform(0.02, 0.98);
            analytic += oracles::binary_entropy_bits(p);
        }
        const EntropyEstimate est = estimate_entropy(model, 100000, 10 + round);
        REQUIRE(std::abs(est.bits - analytic) <= 3.0 * std::max(est.std_error, 1e-12));
    }
}

TEST_CASE("entropy estimates stay within [0, D] up to Monte-Carlo error") {
    Rng rng(609);
    for (std::uint64_t round = 0; round < 10; ++round) {
        const std::vector<Bitstring> data = random_bitstrings(rng, 80, 24);
        const EmFitResult fit = em_fit(data, 2, round);
        const EntropyEstimate est = estimate_entropy(fit.model, 20000, round);
        REQUIRE(est.bits >= 0.0);
        REQUIRE(est.bits <= 24.0 + 5.0 * est.std_error);
    }
}

TEST_CASE("estimate_entropy is deterministic given the seed") {
    const BernoulliMixture model = uniform_model(16);
    const EntropyEstimate a = estimate_entropy(model, 5000, 21);
    const EntropyEstimate b = estimate_entropy(model, 5000, 21);
    CHECK(a.bits == b.bits);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("mixture validation") {
    BernoulliMixture model = uniform_model(4);
    model.weights = {0.5, 0.6};
    CHECK_THROWS_AS(model.validate(), InvalidModel);

    model = uniform_model(4);
    model.probs[0][2] = 0.0;  // outside the clamp range
    CHECK_THROWS_AS(model.validate(), InvalidModel);

    model = BernoulliMixture{};
    CHECK_THROWS_AS(model.validate(), InvalidModel);
}
