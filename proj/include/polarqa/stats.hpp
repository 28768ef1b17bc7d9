#pragma once

// Scoring and statistics: 3-class P/R/F1 reports, 20/80 benchmark splits,
// linearly weighted Cohen's kappa, McNemar's paired test, and label
// distributions.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polarqa/corpus.hpp"
#include "polarqa/error.hpp"
#include "polarqa/rng.hpp"
#include "polarqa/rounding.hpp"

namespace polarqa {

struct PrfScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct EvalReport {
    std::array<std::array<std::size_t, 3>, 3> confusion{};  // [gold][pred]
    std::map<Interpretation, PrfScores> per_label;
    double macro_f1 = 0.0;
    double accuracy = 0.0;
    std::size_t n = 0;
};

// One-vs-rest P/R/F1 per label from the 3x3 confusion matrix; macro-F1 is the
// unweighted mean over the three labels. 0/0 ratios are defined as 0.
inline EvalReport score(const std::vector<Interpretation>& preds,
                        const std::vector<Interpretation>& gold) {
    if (preds.size() != gold.size())
        throw DataError("score: " + std::to_string(preds.size()) + " predictions vs " +
                        std::to_string(gold.size()) + " gold labels");
    if (preds.empty()) throw DataError("score: empty input");

    EvalReport r;
    r.n = preds.size();
    for (std::size_t i = 0; i < preds.size(); ++i)
        r.confusion[static_cast<int>(gold[i])][static_cast<int>(preds[i])]++;

    double f1_sum = 0.0;
    std::size_t correct = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t tp = r.confusion[k][k];
        std::size_t gold_k = 0, pred_k = 0;
        for (int j = 0; j < 3; ++j) {
            gold_k += r.confusion[k][j];
            pred_k += r.confusion[j][k];
        }
        correct += tp;
        PrfScores s;
        s.precision = pred_k ? static_cast<double>(tp) / pred_k : 0.0;
        s.recall = gold_k ? static_cast<double>(tp) / gold_k : 0.0;
        s.f1 = (s.precision + s.recall) > 0.0
                   ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                   : 0.0;
        r.per_label[static_cast<Interpretation>(k)] = s;
        f1_sum += s.f1;
    }
    r.macro_f1 = f1_sum / 3.0;
    r.accuracy = static_cast<double>(correct) / r.n;
    return r;
}

// Seeded 20/80 split: validation takes the first round(0.2*n) items of a
// uniform shuffle, the test set the rest.
template <typename T>
inline std::pair<std::vector<T>, std::vector<T>> split_benchmark(const std::vector<T>& items,
                                                                 std::uint64_t seed) {
    if (items.size() < 5)
        throw DataError("split needs at least 5 instances, got " + std::to_string(items.size()));
    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Rng rng(seed);
    rng.shuffle(idx);
    std::size_t k =
        static_cast<std::size_t>(round_half_even(0.2 * static_cast<double>(items.size())));
    std::pair<std::vector<T>, std::vector<T>> out;
    for (std::size_t i = 0; i < idx.size(); ++i)
        (i < k ? out.first : out.second).push_back(items[idx[i]]);
    return out;
}

// Linearly weighted Cohen's kappa over the ordinal order Yes < Middle < No.
// kappa = 1 - sum(w*O)/sum(w*E); identical constant annotators = 1.
inline double weighted_kappa(const std::vector<Interpretation>& ann_a,
                             const std::vector<Interpretation>& ann_b) {
    if (ann_a.size() != ann_b.size())
        throw DataError("kappa: " + std::to_string(ann_a.size()) + " vs " +
                        std::to_string(ann_b.size()) + " annotations");
    if (ann_a.empty()) throw DataError("kappa: empty input");

    const double n = static_cast<double>(ann_a.size());
    double observed[3][3] = {};
    double marg_a[3] = {}, marg_b[3] = {};
    for (std::size_t i = 0; i < ann_a.size(); ++i) {
        int a = static_cast<int>(ann_a[i]), b = static_cast<int>(ann_b[i]);
        observed[a][b] += 1.0 / n;
        marg_a[a] += 1.0 / n;
        marg_b[b] += 1.0 / n;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double w = std::abs(i - j) / 2.0;  // linear weights over 3 ordinal levels
            num += w * observed[i][j];
            den += w * marg_a[i] * marg_b[j];
        }
    if (den == 0.0) return 1.0;  // both annotators constant and identical
    return 1.0 - num / den;
}

// Mean pairwise kappa for three or more annotators.
inline double weighted_kappa_multi(const std::vector<std::vector<Interpretation>>& annotators) {
    if (annotators.size() < 2) throw DataError("kappa: need at least two annotators");
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < annotators.size(); ++i)
        for (std::size_t j = i + 1; j < annotators.size(); ++j) {
            sum += weighted_kappa(annotators[i], annotators[j]);
            ++pairs;
        }
    return sum / static_cast<double>(pairs);
}

struct McnemarResult {
    std::size_t b = 0;  // a correct, b wrong
    std::size_t c = 0;  // a wrong, b correct
    double p_value = 1.0;
    bool exact = true;  // exact binomial (small samples) vs chi-square branch
};

namespace detail {

inline double binom_coeff(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

}  // namespace detail

// Paired McNemar test over discordant predictions. Exact two-sided binomial
// for b+c < 25, chi-square with continuity correction above.
inline McnemarResult mcnemar_test(const std::vector<std::string>& preds_a,
                                  const std::vector<std::string>& preds_b,
                                  const std::vector<std::string>& gold) {
    if (preds_a.size() != preds_b.size() || preds_a.size() != gold.size())
        throw DataError("mcnemar: prediction/gold lengths differ (" +
                        std::to_string(preds_a.size()) + ", " + std::to_string(preds_b.size()) +
                        ", " + std::to_string(gold.size()) + ")");
    if (gold.empty()) throw DataError("mcnemar: empty input");

    McnemarResult r;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        bool a_ok = preds_a[i] == gold[i];
        bool b_ok = preds_b[i] == gold[i];
        if (a_ok && !b_ok) ++r.b;
        if (!a_ok && b_ok) ++r.c;
    }
    const std::size_t n = r.b + r.c;
    if (n == 0) {
        r.p_value = 1.0;
        return r;
    }
    if (n < 25) {
        const std::size_t m = std::min(r.b, r.c);
        double tail = 0.0;
        for (std::size_t k = 0; k <= m; ++k)
            tail += detail::binom_coeff(n, k) * std::pow(0.5, static_cast<double>(n));
        r.p_value = std::min(1.0, 2.0 * tail);
        return r;
    }
    r.exact = false;
    double diff = std::abs(static_cast<double>(r.b) - static_cast<double>(r.c)) - 1.0;
    double x = diff * diff / static_cast<double>(n);
    r.p_value = std::erfc(std::sqrt(x / 2.0));  // chi-square(1) upper tail
    return r;
}

// Counts and fractions per interpretation; fractions sum to 1 over non-empty
// input.
struct LabelStats {
    std::size_t count = 0;
    double fraction = 0.0;
};

inline std::map<Interpretation, LabelStats> label_distribution(
    const std::vector<Interpretation>& labels) {
    std::map<Interpretation, LabelStats> out;
    for (auto v : {Interpretation::Yes, Interpretation::Middle, Interpretation::No}) out[v] = {};
    for (auto l : labels) out[l].count++;
    if (!labels.empty())
        for (auto& [_, s] : out)
            s.fraction = static_cast<double>(s.count) / static_cast<double>(labels.size());
    return out;
}

}  // namespace polarqa
