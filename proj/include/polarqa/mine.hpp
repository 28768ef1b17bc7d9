#pragma once

// Distant-supervision mining: corpus of pairs → direct-answer instances with
// noisy labels, indirect-answer candidates, and run statistics. Single pass,
// constant memory beyond the outputs.

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/ingest.hpp"
#include "polarqa/rng.hpp"
#include "polarqa/rule_eval.hpp"

namespace polarqa {

struct DistantInstance {
    QAPair pair;
    Interpretation label = Interpretation::Yes;  // Yes or No only, never Middle
    MatchTrace trace;
};

struct IndirectCandidate {
    QAPair pair;
};

struct MiningReport {
    std::size_t pairs_total = 0;
    std::size_t questions_found = 0;  // == answers examined
    std::size_t direct_count = 0;
    std::size_t yes_count = 0;
    std::size_t no_count = 0;
    std::size_t indirect_count = 0;
    std::size_t discarded_count = 0;
    std::map<std::string, std::size_t> per_reason_discards;

    double yes_ratio() const {
        return direct_count ? static_cast<double>(yes_count) / direct_count : 0.0;
    }
    double no_ratio() const {
        return direct_count ? static_cast<double>(no_count) / direct_count : 0.0;
    }
};

// Push-style miner so corpora larger than memory can stream through; the
// instance/candidate sinks are plain vectors here because downstream sampling
// needs them materialized anyway.
class Miner {
  public:
    explicit Miner(RulePack pack) : pack_(std::move(pack)) { validate_pack(pack_); }

    void feed(const QAPair& pair) {
        if (pair.question.language != pack_.language)
            throw DataError("pair " + pair.id() + ": language '" + pair.question.language +
                            "' does not match the '" + pack_.language + "' pack");
        ++report_.pairs_total;
        PairResult r = classify_pair(pair, pack_);
        switch (r.cls) {
            case PairClass::NotYesNo: return;
            case PairClass::DirectYes:
            case PairClass::DirectNo:
                ++report_.questions_found;
                ++report_.direct_count;
                (*r.label == Interpretation::Yes ? report_.yes_count : report_.no_count)++;
                instances_.push_back({pair, *r.label, std::move(r.answer_trace)});
                break;
            case PairClass::Indirect:
                ++report_.questions_found;
                ++report_.indirect_count;
                candidates_.push_back({pair});
                break;
            case PairClass::Discarded:
                ++report_.questions_found;
                ++report_.discarded_count;
                ++report_.per_reason_discards[r.discard_reason];
                break;
        }
    }

    std::vector<DistantInstance>& instances() { return instances_; }
    std::vector<IndirectCandidate>& candidates() { return candidates_; }
    const MiningReport& report() const { return report_; }

  private:
    RulePack pack_;
    std::vector<DistantInstance> instances_;
    std::vector<IndirectCandidate> candidates_;
    MiningReport report_;
};

struct MineOutput {
    std::vector<DistantInstance> instances;
    std::vector<IndirectCandidate> candidates;
    MiningReport report;
};

inline MineOutput mine(const std::vector<QAPair>& pairs, const RulePack& pack) {
    Miner m(pack);
    for (auto& p : pairs) m.feed(p);
    return {std::move(m.instances()), std::move(m.candidates()), m.report()};
}

// --- outputs ----------------------------------------------------------------

inline ordered_json instance_to_json(const DistantInstance& inst) {
    ordered_json j;
    j["question"] = inst.pair.question.text;
    j["answer"] = inst.pair.answer.text;
    j["label"] = std::string(to_string(inst.label));
    j["language"] = inst.pair.question.language;
    j["source"] = inst.pair.source;
    j["id"] = inst.pair.id();
    j["trace"] = inst.trace.summary();
    return j;
}

// JSON-lines export, stable field order, byte-identical across runs.
inline void export_dataset(const std::vector<DistantInstance>& instances,
                           const std::string& path) {
    for (auto& inst : instances)
        if (inst.label == Interpretation::Middle)
            throw DataError("instance " + inst.pair.id() +
                            ": distant labels must be yes or no, got middle");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write: " + path);
    for (auto& inst : instances) out << instance_to_json(inst).dump() << "\n";
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw IoError("write failed: " + path);
    }
}

inline void export_candidates(const std::vector<IndirectCandidate>& candidates,
                              const std::string& path) {
    std::vector<QAPair> pairs;
    pairs.reserve(candidates.size());
    for (auto& c : candidates) pairs.push_back(c.pair);
    write_qa_pairs(pairs, path);
}

// Uniform sample without replacement via one seeded shuffle.
inline std::vector<IndirectCandidate> sample_candidates(
    const std::vector<IndirectCandidate>& candidates, std::size_t n, std::uint64_t seed) {
    if (n > candidates.size())
        throw DataError("sample of " + std::to_string(n) + " requested but only " +
                        std::to_string(candidates.size()) + " candidates available");
    std::vector<std::size_t> idx(candidates.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Rng rng(seed);
    rng.shuffle(idx);
    std::vector<IndirectCandidate> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(candidates[idx[i]]);
    return out;
}

// Table-style run statistics, one block per report.
inline std::string report_to_text(const MiningReport& r) {
    std::string s;
    auto line = [&](const std::string& k, std::size_t v) {
        s += k;
        s += ": ";
        s += std::to_string(v);
        s += "\n";
    };
    line("pairs scanned", r.pairs_total);
    line("yes-no questions found", r.questions_found);
    line("direct answers", r.direct_count);
    line("  labeled yes", r.yes_count);
    line("  labeled no", r.no_count);
    line("indirect answers", r.indirect_count);
    line("discarded answers", r.discarded_count);
    for (auto& [reason, count] : r.per_reason_discards)
        line("  discarded by " + reason, count);
    char buf[64];
    std::snprintf(buf, sizeof buf, "yes ratio over direct: %.4f\n", r.yes_ratio());
    s += buf;
    std::snprintf(buf, sizeof buf, "no ratio over direct: %.4f\n", r.no_ratio());
    s += buf;
    return s;
}

inline ordered_json report_to_json(const MiningReport& r) {
    ordered_json j;
    j["pairs_total"] = r.pairs_total;
    j["questions_found"] = r.questions_found;
    j["direct_count"] = r.direct_count;
    j["yes_count"] = r.yes_count;
    j["no_count"] = r.no_count;
    j["indirect_count"] = r.indirect_count;
    j["discarded_count"] = r.discarded_count;
    j["yes_ratio"] = r.yes_ratio();
    j["no_ratio"] = r.no_ratio();
    j["per_reason_discards"] = ordered_json::object();
    for (auto& [reason, count] : r.per_reason_discards) j["per_reason_discards"][reason] = count;
    return j;
}

}  // namespace polarqa
