// Acceptance suite: twelve release criteria, one PASS/FAIL line each.
// Exits non-zero if any criterion fails. Oracles here are computed
// independently of the library code under test wherever possible.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "polarqa/audit.hpp"
#include "polarqa/blend.hpp"
#include "polarqa/builtin_packs.hpp"
#include "polarqa/fixtures.hpp"
#include "polarqa/greedy.hpp"
#include "polarqa/ingest.hpp"
#include "polarqa/label_map.hpp"
#include "polarqa/langsim.hpp"
#include "polarqa/mine.hpp"
#include "polarqa/rule_eval.hpp"
#include "polarqa/stats.hpp"

using namespace polarqa;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS " << n << ": " << name << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL " << n << ": " << name << " -- " << e.what() << "\n";
    }
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

const Interpretation Y = Interpretation::Yes;
const Interpretation M = Interpretation::Middle;
const Interpretation N = Interpretation::No;

// ---- criterion 1: every fixture classifies identically to its hand label --

void rule_pack_fidelity() {
    auto t0 = std::chrono::steady_clock::now();
    for (auto& lang : supported_builtin_languages()) {
        auto pack = builtin_pack(lang);
        auto fixtures = fixture_corpus(lang);
        expect(fixtures.size() >= 40, lang + ": fixture corpus smaller than 40");
        for (auto& f : fixtures) {
            auto r = classify_pair(f.pair, pack);
            expect(r.cls == f.expected, lang + " " + f.pair.id() + " [" + f.note +
                                            "]: classified " +
                                            std::string(pair_class_name(r.cls)) + ", expected " +
                                            std::string(pair_class_name(f.expected)));
            if (f.expected == PairClass::Discarded)
                expect(r.discard_reason == f.discard_reason,
                       lang + " " + f.pair.id() + ": discard reason " + r.discard_reason);
        }
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(secs < 1.0, "fixture classification took " + std::to_string(secs) + "s");
}

// ---- criterion 2: label harmonization tables are total and exact ----------

void mapping_totality() {
    using Row = std::pair<std::string, MappedLabel>;
    auto check_scheme = [](const MappingScheme& scheme, const std::vector<Row>& expected) {
        expect(scheme.table.size() == expected.size(),
               scheme.name + ": expected " + std::to_string(expected.size()) + " entries");
        for (auto& [label, mapped] : expected)
            expect(map_label(scheme, label) == mapped, scheme.name + ": '" + label + "'");
        bool rejected = false;
        try {
            map_label(scheme, "No Such Label");
        } catch (const DataError&) {
            rejected = true;
        }
        expect(rejected, scheme.name + ": unknown label not rejected");
    };
    check_scheme(circa_relaxed_scheme(),
                 {{"Yes", MappedLabel::Yes},
                  {"No", MappedLabel::No},
                  {"Yes, subject to some conditions", MappedLabel::Yes},
                  {"In the middle, neither yes nor no", MappedLabel::Middle},
                  {"Other", MappedLabel::Discard},
                  {"N/A", MappedLabel::Discard}});
    check_scheme(swda_ia_scheme(), {{"Yes", MappedLabel::Yes},
                                    {"Probably Yes", MappedLabel::Yes},
                                    {"Middle", MappedLabel::Middle},
                                    {"Probably No", MappedLabel::No},
                                    {"No", MappedLabel::No}});
    check_scheme(friends_qia_scheme(),
                 {{"Yes", MappedLabel::Yes},
                  {"No", MappedLabel::No},
                  {"Yes, subject to some conditions", MappedLabel::Yes},
                  {"Neither yes nor no", MappedLabel::Middle},
                  {"Other", MappedLabel::Discard},
                  {"N/A", MappedLabel::Discard}});
}

// ---- criterion 3: mining counts partition the question set ----------------

std::vector<QAPair> synthetic_turkish(std::size_t n, std::uint64_t seed) {
    const std::vector<std::string> questions = {
        "yarın gelir misin?",      "bu doğru mu?",          "bugün müsait misin?",
        "nerede buluşuyoruz?",     "bugün hava çok güzel",  "sence olur mu?",
        "kargo geldi mi?",         "kim geldi dün akşam?",  "bunu sen mi yaptın?",
        "ne zaman geliyorsun sen?"};
    const std::vector<std::string> answers = {
        "evet gelirim",      "hayır bugün olmaz", "bilemedim valla", "tabii ki olur",
        "aynen öyle",        "belki bakarız",     "yoo hiç sanmam",  "bilmem ki",
        "evet tabii gel",    "olur mu öyle şey"};
    Rng rng(seed);
    std::vector<QAPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        SourceMeta am;
        am.is_accepted = rng.bounded(4) != 0;  // a quarter unaccepted
        pairs.push_back(make_qa_pair(
            make_turn("q" + std::to_string(i), questions[rng.bounded(questions.size())], "tr"),
            make_turn("a" + std::to_string(i), answers[rng.bounded(answers.size())], "tr",
                      std::nullopt, am),
            "synthetic"));
    }
    return pairs;
}

void mining_partition() {
    auto pairs = synthetic_turkish(10000, 99);
    auto out = mine(pairs, builtin_pack("tr"));
    const auto& r = out.report;
    expect(r.pairs_total == 10000, "pairs_total");
    expect(r.direct_count + r.indirect_count + r.discarded_count == r.questions_found,
           "direct+indirect+discarded != questions examined");
    expect(r.yes_count + r.no_count == r.direct_count, "yes+no != direct");
    expect(r.questions_found > 0 && r.discarded_count > 0, "degenerate corpus");

    // independent recount from the exported instances
    std::size_t yes = 0, no = 0;
    for (auto& inst : out.instances)
        (inst.label == Interpretation::Yes ? yes : no) += 1;
    expect(yes == r.yes_count && no == r.no_count, "exported labels disagree with report");
    expect(out.instances.size() == r.direct_count, "instance count != direct_count");
    double recount = r.direct_count == 0
                         ? 0.0
                         : static_cast<double>(yes) / static_cast<double>(r.direct_count);
    expect(r.yes_ratio() == recount, "yes_ratio != independent recount");
}

// ---- criterion 4: blend decay, nestedness, gold invariance ----------------

void blend_decay() {
    for (double alpha : {0.0, 0.25, 0.5, 1.0})
        for (std::size_t n : {std::size_t{1}, std::size_t{10}, std::size_t{1000}}) {
            auto plan = make_blend_plan({}, {{"d", n}}, alpha, 6, 3);
            for (auto& m : plan.manifests) {
                double target = static_cast<double>(n) *
                                std::pow(alpha, static_cast<double>(m.epoch - 1));
                auto expected = static_cast<std::size_t>(std::nearbyint(target));
                expect(m.item_refs.size() == expected,
                       "alpha=" + std::to_string(alpha) + " n=" + std::to_string(n) +
                           " epoch=" + std::to_string(m.epoch) + ": got " +
                           std::to_string(m.item_refs.size()) + ", want " +
                           std::to_string(expected));
            }
        }

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto plan = make_blend_plan({{"g", 5}}, {{"a", 37}, {"b", 20}}, 0.5, 5, seed);
        std::vector<ItemRef> gold_expect;
        for (std::size_t i = 0; i < 5; ++i) gold_expect.push_back({"g", i});
        std::set<ItemRef> prev_a, prev_b;
        for (std::size_t e = 0; e < plan.manifests.size(); ++e) {
            const auto& refs = plan.manifests[e].item_refs;
            expect(refs.size() >= 5 && std::equal(gold_expect.begin(), gold_expect.end(),
                                                  refs.begin()),
                   "gold portion changed at epoch " + std::to_string(e + 1));
            std::set<ItemRef> cur_a, cur_b;
            for (std::size_t i = 5; i < refs.size(); ++i)
                (refs[i].dataset == "a" ? cur_a : cur_b).insert(refs[i]);
            if (e > 0) {
                for (auto& ref : cur_a)
                    expect(prev_a.count(ref) == 1, "noisy subset not nested (a)");
                for (auto& ref : cur_b)
                    expect(prev_b.count(ref) == 1, "noisy subset not nested (b)");
            }
            prev_a = std::move(cur_a);
            prev_b = std::move(cur_b);
        }
    }
}

// ---- criterion 5: greedy adopts {zh} in exactly four evaluations ----------

void greedy_trace() {
    const char* stub = std::getenv("STUB_EVALUATOR");
    expect(stub != nullptr, "STUB_EVALUATOR not set");
    testutil::TempDir dir;
    auto table = dir.file("table.tsv");
    testutil::write_file(table, "-\t0.50\nzh\t0.60\ntr\t0.55\ntr+zh\t0.58\n");
    EvaluatorSpec spec;
    spec.command = {stub, table};
    auto st = greedy_select({}, {"zh", "tr"}, spec, 0, dir.file("work"));
    expect(!st.aborted, "search aborted: " + st.error);
    expect(st.best.dataset_ids == std::vector<std::string>{"zh"}, "did not adopt {zh}");
    expect(st.best.score == 0.60, "best score");
    expect(st.history.size() == 4, "history has " + std::to_string(st.history.size()) +
                                       " evaluations, want 4");
    expect(st.remaining == std::vector<std::string>{"tr"}, "remaining set");
}

// ---- criterion 6: McNemar against brute-force enumeration -----------------

void mcnemar_oracle() {
    double pascal[25][25] = {};
    for (int n = 0; n <= 24; ++n) {
        pascal[n][0] = pascal[n][n] = 1.0;
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    auto table = [](std::size_t b, std::size_t c) {
        std::vector<std::string> pa, pb, gold;
        for (std::size_t i = 0; i < b; ++i) {
            pa.push_back("y");
            pb.push_back("n");
            gold.push_back("y");
        }
        for (std::size_t i = 0; i < c; ++i) {
            pa.push_back("n");
            pb.push_back("y");
            gold.push_back("y");
        }
        pa.push_back("y");  // one concordant pair so inputs are never empty
        pb.push_back("y");
        gold.push_back("y");
        return mcnemar_test(pa, pb, gold);
    };
    for (std::size_t b = 0; b <= 24; ++b)
        for (std::size_t c = 0; b + c <= 24; ++c) {
            auto r = table(b, c);
            expect(r.b == b && r.c == c, "discordant counts");
            double expected = 1.0;
            if (b + c > 0) {
                double tail = 0.0;
                for (std::size_t k = 0; k <= std::min(b, c); ++k)
                    tail += pascal[b + c][k] / std::pow(2.0, static_cast<double>(b + c));
                expected = std::min(1.0, 2.0 * tail);
                expect(r.exact, "exact branch not taken");
            }
            expect(std::abs(r.p_value - expected) <= 1e-12,
                   "b=" + std::to_string(b) + " c=" + std::to_string(c) + ": p=" +
                       std::to_string(r.p_value) + " want " + std::to_string(expected));
        }
    expect(table(2, 8).p_value == 0.109375, "b=2,c=8 p-value");
}

// ---- criterion 7: weighted kappa landmarks --------------------------------

void kappa_landmarks() {
    std::vector<Interpretation> same = {Y, N, M, Y, N, M, Y};
    expect(weighted_kappa(same, same) == 1.0, "identical annotations");

    // direct formula evaluation of the 4-item example
    std::vector<Interpretation> a = {Y, Y, N, M};
    std::vector<Interpretation> b = {Y, M, N, M};
    double obs[3][3] = {}, ma[3] = {}, mb[3] = {};
    for (std::size_t i = 0; i < a.size(); ++i) {
        obs[static_cast<int>(a[i])][static_cast<int>(b[i])] += 0.25;
        ma[static_cast<int>(a[i])] += 0.25;
        mb[static_cast<int>(b[i])] += 0.25;
    }
    double num = 0, den = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            num += std::abs(i - j) / 2.0 * obs[i][j];
            den += std::abs(i - j) / 2.0 * ma[i] * mb[j];
        }
    double direct = 1.0 - num / den;
    expect(std::abs(weighted_kappa(a, b) - direct) <= 1e-9, "4-item example");

    std::mt19937 gen(2024);  // independent generator on purpose
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Interpretation> ra, rb;
    for (int i = 0; i < 10000; ++i) {
        ra.push_back(static_cast<Interpretation>(pick(gen)));
        rb.push_back(static_cast<Interpretation>(pick(gen)));
    }
    double k = weighted_kappa(ra, rb);
    expect(std::abs(k) < 0.1, "independent annotators: kappa=" + std::to_string(k));
}

// ---- criterion 8: scorer landmarks -----------------------------------------

void scorer_landmarks() {
    std::vector<Interpretation> gold = {Y, Y, N, N, M, M};
    std::vector<Interpretation> preds = {Y, N, N, M, M, Y};
    expect(std::abs(score(preds, gold).macro_f1 - 0.5) <= 1e-9, "6-item macro-F1");
    expect(score(gold, gold).macro_f1 == 1.0, "perfect predictions");
}

// ---- criterion 9: split sizes and partition properties ---------------------

void split_sizes() {
    std::vector<int> v300(300), v600(600);
    for (int i = 0; i < 600; ++i) {
        if (i < 300) v300[i] = i;
        v600[i] = i;
    }
    auto s300 = split_benchmark(v300, 0);
    expect(s300.first.size() == 60 && s300.second.size() == 240, "n=300 split");
    auto s600 = split_benchmark(v600, 0);
    expect(s600.first.size() == 120 && s600.second.size() == 480, "n=600 split");

    std::vector<int> items(101);
    for (int i = 0; i < 101; ++i) items[i] = i;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto s = split_benchmark(items, seed);
        auto again = split_benchmark(items, seed);
        expect(s == again, "split not deterministic per seed");
        std::set<int> all(s.first.begin(), s.first.end());
        expect(all.size() == s.first.size(), "duplicate items in validation");
        all.insert(s.second.begin(), s.second.end());
        expect(all.size() == 101 && s.first.size() + s.second.size() == 101,
               "partition not disjoint/exhaustive");
    }
}

// ---- criterion 10: audit precision arithmetic -------------------------------

void audit_arithmetic() {
    AuditSheet sheet;
    sheet.type = AuditType::Interpretation;
    for (int i = 0; i < 200; ++i)
        sheet.rows.push_back({"row" + std::to_string(i), "q", "a", "yes",
                              i < 130 ? "yes" : "no"});
    auto s = score_audit(sheet);
    expect(s.n == 200 && s.agreed == 130, "agreement count");
    expect(s.precision == 0.65, "precision not exactly 0.65");
}

// ---- criterion 11: cosine landmarks and invariances ------------------------

void cosine_landmarks() {
    LangVector ones{"a", {1.0, 1.0, 1.0, 1.0}};
    expect(cosine_similarity(ones, ones) == 1.0, "identity");
    LangVector ex{"x", {1.0, 0.0}}, ey{"y", {0.0, 1.0}};
    expect(cosine_similarity(ex, ey) == 0.0, "orthogonal");
    LangVector ma{"a", {1.0, 1.0, std::nullopt}}, mb{"b", {1.0, 0.0, 1.0}};
    expect(std::abs(cosine_similarity(ma, mb) - 0.70710678) <= 1e-8, "masked example");

    std::mt19937 gen(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        LangVector va{"a", {}}, vb{"b", {}};
        for (int i = 0; i < 8; ++i) {
            va.features.push_back(unit(gen));
            vb.features.push_back(unit(gen));
        }
        // guarantee nonzero norms
        va.features[0] = 0.5 + unit(gen) / 2.0;
        vb.features[0] = 0.5 + unit(gen) / 2.0;
        double s = cosine_similarity(va, vb);
        expect(std::abs(cosine_similarity(vb, va) - s) <= 1e-12, "symmetry");
        LangVector scaled = va;
        for (auto& f : scaled.features) *f *= 0.5;
        expect(std::abs(cosine_similarity(scaled, vb) - s) <= 1e-12, "scale invariance");
    }
}

// ---- criterion 12: end-to-end mine determinism ------------------------------

void mine_determinism() {
    const char* bin = std::getenv("POLARQA_BIN");
    expect(bin != nullptr, "POLARQA_BIN not set");
    testutil::TempDir dir;
    auto pairs = synthetic_turkish(500, 4);
    auto corpus = dir.file("corpus.jsonl");
    write_qa_pairs(pairs, corpus);

    auto run = [&](const std::string& tag) {
        std::ostringstream cmd;
        cmd << bin << " mine --corpus " << corpus << " --pack tr --out-direct "
            << dir.file("direct-" + tag) << " --out-indirect " << dir.file("indirect-" + tag)
            << " --report " << dir.file("report-" + tag) << " >/dev/null 2>&1";
        int rc = std::system(cmd.str().c_str());
        expect(WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "mine exited nonzero");
    };
    run("1");
    run("2");
    for (auto name : {"direct", "indirect", "report"}) {
        auto a = testutil::read_file(dir.file(std::string(name) + "-1"));
        auto b = testutil::read_file(dir.file(std::string(name) + "-2"));
        expect(!a.empty() && a == b, std::string(name) + " output not byte-identical");
    }
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion(1, "rule-pack fidelity on the hand-labeled fixtures", rule_pack_fidelity);
    criterion(2, "label mapping tables are total and exact", mapping_totality);
    criterion(3, "mining counts partition the question set", mining_partition);
    criterion(4, "blend decay, nested subsets, gold invariance", blend_decay);
    criterion(5, "greedy trace adopts {zh} in four evaluations", greedy_trace);
    criterion(6, "mcnemar matches brute-force enumeration", mcnemar_oracle);
    criterion(7, "weighted kappa landmarks", kappa_landmarks);
    criterion(8, "scorer macro-F1 landmarks", scorer_landmarks);
    criterion(9, "split sizes and partition properties", split_sizes);
    criterion(10, "audit precision arithmetic", audit_arithmetic);
    criterion(11, "cosine landmarks and invariances", cosine_landmarks);
    criterion(12, "end-to-end mine determinism", mine_determinism);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << secs << "s)\n";
    if (secs >= 60.0) {
        std::cout << "FAIL: suite exceeded 60s\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
