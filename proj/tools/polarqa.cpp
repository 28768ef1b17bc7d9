// polarqa: one entry point for the whole toolkit. Subcommands mirror the
// pipeline stages: mine distant supervision, harmonize gold corpora, plan
// blended training, run greedy language selection, and score the results.
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error, 3 evaluator
// failure. Diagnostics go to stderr; data goes to files or stdout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarqa/audit.hpp"
#include "polarqa/blend.hpp"
#include "polarqa/builtin_packs.hpp"
#include "polarqa/greedy.hpp"
#include "polarqa/ingest.hpp"
#include "polarqa/label_map.hpp"
#include "polarqa/langsim.hpp"
#include "polarqa/mine.hpp"
#include "polarqa/stats.hpp"

namespace {

using namespace polarqa;

struct RunConfig {
    std::uint64_t seed = 0;
};

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// --pack accepts a file path or a built-in language code; an unknown code is
// a usage error (the message lists what is available).
RulePack resolve_pack(const std::string& arg) {
    if (std::filesystem::exists(arg)) return load_pack(arg);
    try {
        return builtin_pack(arg);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<Interpretation> read_interpretations(const std::string& path) {
    std::vector<Interpretation> out;
    std::size_t line_no = 0;
    for (auto& line : read_lines(path)) {
        ++line_no;
        try {
            out.push_back(interpretation_from_string(uni::trim(line)));
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write: " + path);
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

// Report sink: a file when the flag was given, stdout otherwise.
void emit_report(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_text(path, text);
}

DatasetSpec parse_dataset_spec(const std::string& arg) {
    auto colon = arg.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size())
        throw UsageError("expected <id>:<size>, got '" + arg + "'");
    DatasetSpec spec;
    spec.id = arg.substr(0, colon);
    try {
        spec.size = std::stoull(arg.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("bad dataset size in '" + arg + "'");
    }
    return spec;
}

void setup_mine(CLI::App& app) {
    struct Opts {
        std::string corpus, profile = "qa-pairs", pack, out_direct, out_indirect, report, source,
                    format = "text";
    };
    auto* sub = app.add_subcommand("mine", "Mine yes/no questions and direct answers");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--corpus", opt->corpus, "input JSONL")->required();
    sub->add_option("--profile", opt->profile, "flat-turns|threaded-replies|faq-pairs|qa-pairs");
    sub->add_option("--pack", opt->pack, "rule pack: language code or JSON file")->required();
    sub->add_option("--out-direct", opt->out_direct, "labeled instances (JSONL)")->required();
    sub->add_option("--out-indirect", opt->out_indirect, "indirect-answer candidates (JSONL)")
        ->required();
    sub->add_option("--report", opt->report, "mining report (default: stdout)");
    sub->add_option("--source", opt->source, "source tag for ingested pairs");
    sub->add_option("--format", opt->format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt] {
        IngestProfile profile = ingest_profile_from_name(opt->profile);
        RulePack pack = resolve_pack(opt->pack);
        std::string source =
            opt->source.empty() ? std::filesystem::path(opt->corpus).stem().string() : opt->source;
        std::vector<IngestError> errs;
        auto pairs = load_pairs(opt->corpus, profile, source, &errs);
        for (auto& e : errs)
            std::cerr << opt->corpus << ":" << e.line << ": skipped: " << e.message << "\n";
        auto out = mine(pairs, pack);
        export_dataset(out.instances, opt->out_direct);
        export_candidates(out.candidates, opt->out_indirect);
        emit_report(opt->report, opt->format == "json" ? report_to_json(out.report).dump(2) + "\n"
                                                       : report_to_text(out.report));
    });
}

void setup_map_labels(CLI::App& app) {
    struct Opts {
        std::string scheme, in, out, language = "en", format = "text";
        std::string question_field = "question", answer_field = "answer", label_field = "label",
                    context_field = "context";
    };
    auto* sub = app.add_subcommand("map-labels", "Harmonize an annotated corpus's label set");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--scheme", opt->scheme, "circa-relaxed|swda-ia|friends-qia")->required();
    sub->add_option("--in", opt->in, "annotated rows (JSONL)")->required();
    sub->add_option("--out", opt->out, "harmonized instances (JSONL)")->required();
    sub->add_option("--language", opt->language, "language code for the rows");
    sub->add_option("--question-field", opt->question_field, "input field holding the question");
    sub->add_option("--answer-field", opt->answer_field, "input field holding the answer");
    sub->add_option("--label-field", opt->label_field, "input field holding the original label");
    sub->add_option("--context-field", opt->context_field, "input field holding context turns");
    sub->add_option("--format", opt->format, "stats format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt] {
        auto scheme = mapping_scheme(opt->scheme);
        std::vector<LabeledRow> rows;
        std::size_t line_no = 0;
        for (auto& line : read_lines(opt->in)) {
            ++line_no;
            ordered_json j;
            try {
                j = ordered_json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw DataError(opt->in + ":" + std::to_string(line_no) + ": " + e.what());
            }
            if (!j.contains(opt->question_field) || !j.contains(opt->answer_field) ||
                !j.contains(opt->label_field))
                throw DataError(opt->in + ":" + std::to_string(line_no) + ": needs fields '" +
                                opt->question_field + "', '" + opt->answer_field + "', '" +
                                opt->label_field + "'");
            LabeledRow row;
            row.question = j[opt->question_field].get<std::string>();
            row.answer = j[opt->answer_field].get<std::string>();
            row.original_label = j[opt->label_field].get<std::string>();
            if (j.contains(opt->context_field))
                for (auto& c : j[opt->context_field]) row.context.push_back(c.get<std::string>());
            rows.push_back(std::move(row));
        }
        auto [pairs, stats] = convert_corpus(rows, scheme, opt->language);

        std::ofstream out(opt->out, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write: " + opt->out);
        for (auto& lp : pairs) {
            ordered_json j;
            j["question"] = lp.pair.question.text;
            j["answer"] = lp.pair.answer.text;
            j["label"] = std::string(to_string(lp.label));
            j["language"] = lp.pair.question.language;
            j["source"] = lp.pair.source;
            j["id"] = lp.pair.id();
            out << j.dump() << "\n";
        }
        out.flush();
        if (!out) throw IoError("write failed: " + opt->out);

        if (opt->format == "json") {
            ordered_json j;
            j["input"] = stats.input;
            j["emitted"] = stats.emitted;
            j["dropped"] = stats.dropped;
            j["per_label"] = stats.per_label;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "rows read: " << stats.input << "\n"
                      << "emitted: " << stats.emitted << "\n"
                      << "dropped: " << stats.dropped << "\n";
            for (auto& [label, n] : stats.per_label)
                std::cout << "  " << label << ": " << n << "\n";
        }
    });
}

void setup_blend(CLI::App& app, std::shared_ptr<RunConfig> cfg) {
    struct Opts {
        std::vector<std::string> gold, noisy;
        double alpha = 0.5;
        std::size_t epochs = 1;
        std::string out, format = "text";
    };
    auto* sub = app.add_subcommand("blend-plan", "Emit per-epoch manifests with decaying noise");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--gold", opt->gold, "gold dataset as <id>:<size> (repeatable)");
    sub->add_option("--noisy", opt->noisy, "noisy dataset as <id>:<size> (repeatable)");
    sub->add_option("--alpha", opt->alpha, "per-epoch decay factor in [0,1]")->required();
    sub->add_option("--epochs", opt->epochs, "number of epochs")->required();
    sub->add_option("--out", opt->out, "output directory for epoch-N manifests")->required();
    sub->add_option("--format", opt->format, "summary format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt, cfg] {
        std::vector<DatasetSpec> gold, noisy;
        for (auto& g : opt->gold) gold.push_back(parse_dataset_spec(g));
        for (auto& n : opt->noisy) noisy.push_back(parse_dataset_spec(n));
        auto plan = make_blend_plan(gold, noisy, opt->alpha, opt->epochs, cfg->seed);
        emit_manifests(plan, opt->out);
        if (opt->format == "json") {
            ordered_json j;
            j["out_dir"] = opt->out;
            j["alpha"] = plan.alpha;
            j["seed"] = plan.seed;
            j["epochs"] = ordered_json::array();
            for (auto& m : plan.manifests) {
                ordered_json e;
                e["epoch"] = m.epoch;
                e["items"] = m.item_refs.size();
                e["file"] = manifest_file_name(m.epoch);
                j["epochs"].push_back(e);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto& m : plan.manifests)
                std::cout << manifest_file_name(m.epoch) << ": " << m.item_refs.size()
                          << " items\n";
        }
    });
}

void setup_greedy(CLI::App& app, std::shared_ptr<RunConfig> cfg) {
    struct Opts {
        std::string base, candidates, evaluator, validation, out, work_dir = "greedy-work";
        double timeout = 60.0;
        int retries = 2;
    };
    auto* sub = app.add_subcommand("greedy", "Greedy forward selection of support languages");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--base", opt->base, "dataset ids always included (comma-separated)");
    sub->add_option("--candidates", opt->candidates, "candidate dataset ids (comma-separated)")
        ->required();
    sub->add_option("--evaluator", opt->evaluator, "evaluator command line")->required();
    sub->add_option("--validation", opt->validation, "validation file passed to the evaluator");
    sub->add_option("--out", opt->out, "JSON search report (default: stdout)");
    sub->add_option("--work-dir", opt->work_dir, "directory for eval-N.manifest files");
    sub->add_option("--timeout", opt->timeout, "evaluator timeout in seconds");
    sub->add_option("--retries", opt->retries, "evaluator retries after a failure");
    sub->callback([opt, cfg] {
        EvaluatorSpec spec;
        std::istringstream in(opt->evaluator);
        std::string tok;
        while (in >> tok) spec.command.push_back(tok);
        spec.timeout_seconds = opt->timeout;
        spec.retries = opt->retries;
        auto st = greedy_select(split_commas(opt->base), split_commas(opt->candidates), spec,
                                cfg->seed, opt->work_dir, opt->validation);
        emit_report(opt->out, search_state_to_json(st).dump(2) + "\n");
        if (st.aborted) throw EvaluatorError(st.error);
    });
}

void setup_mcnemar(CLI::App& app) {
    struct Opts {
        std::string a, b, gold, out, format = "text";
    };
    auto* sub = app.add_subcommand("mcnemar", "Paired McNemar test over two prediction files");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--a", opt->a, "predictions of system A (one per line)")->required();
    sub->add_option("--b", opt->b, "predictions of system B (one per line)")->required();
    sub->add_option("--gold", opt->gold, "gold labels (one per line)")->required();
    sub->add_option("--out", opt->out, "report file (default: stdout)");
    sub->add_option("--format", opt->format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt] {
        auto r = mcnemar_test(read_lines(opt->a), read_lines(opt->b), read_lines(opt->gold));
        const std::string method = r.exact ? "exact-binomial" : "chi-square-cc";
        if (opt->format == "json") {
            ordered_json j;
            j["b"] = r.b;
            j["c"] = r.c;
            j["p_value"] = r.p_value;
            j["method"] = method;
            emit_report(opt->out, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "only A correct (b): " << r.b << "\n"
               << "only B correct (c): " << r.c << "\n"
               << "p-value: " << fmt6(r.p_value) << "\n"
               << "method: " << method << "\n";
            emit_report(opt->out, os.str());
        }
    });
}

void setup_score(CLI::App& app) {
    struct Opts {
        std::string pred, gold, out, format = "text";
    };
    auto* sub = app.add_subcommand("score", "P/R/F1 report for predictions against gold");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--pred", opt->pred, "predicted labels (one per line)")->required();
    sub->add_option("--gold", opt->gold, "gold labels (one per line)")->required();
    sub->add_option("--out", opt->out, "report file (default: stdout)");
    sub->add_option("--format", opt->format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt] {
        auto r = score(read_interpretations(opt->pred), read_interpretations(opt->gold));
        if (opt->format == "json") {
            ordered_json j;
            j["n"] = r.n;
            j["accuracy"] = r.accuracy;
            j["macro_f1"] = r.macro_f1;
            j["per_label"] = ordered_json::object();
            for (auto& [label, s] : r.per_label) {
                ordered_json e;
                e["precision"] = s.precision;
                e["recall"] = s.recall;
                e["f1"] = s.f1;
                j["per_label"][std::string(to_string(label))] = e;
            }
            j["confusion"] = r.confusion;
            emit_report(opt->out, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "n: " << r.n << "\n";
            for (auto& [label, s] : r.per_label)
                os << to_string(label) << ": precision " << fmt4(s.precision) << ", recall "
                   << fmt4(s.recall) << ", f1 " << fmt4(s.f1) << "\n";
            os << "macro-f1: " << fmt4(r.macro_f1) << "\n"
               << "accuracy: " << fmt4(r.accuracy) << "\n";
            emit_report(opt->out, os.str());
        }
    });
}

void setup_split(CLI::App& app, std::shared_ptr<RunConfig> cfg) {
    struct Opts {
        std::string in, out_validation, out_test, format = "text";
    };
    auto* sub = app.add_subcommand("split", "Seeded 20/80 validation/test split of a line file");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--in", opt->in, "input file (one instance per line)")->required();
    sub->add_option("--out-validation", opt->out_validation, "20% validation lines")->required();
    sub->add_option("--out-test", opt->out_test, "80% test lines")->required();
    sub->add_option("--format", opt->format, "summary format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt, cfg] {
        auto lines = read_lines(opt->in);
        auto [val, test] = split_benchmark(lines, cfg->seed);
        std::string val_text, test_text;
        for (auto& l : val) val_text += l + "\n";
        for (auto& l : test) test_text += l + "\n";
        write_text(opt->out_validation, val_text);
        write_text(opt->out_test, test_text);
        if (opt->format == "json") {
            ordered_json j;
            j["validation"] = val.size();
            j["test"] = test.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "validation: " << val.size() << "\ntest: " << test.size() << "\n";
        }
    });
}

void setup_kappa(CLI::App& app) {
    struct Opts {
        std::vector<std::string> files;
        std::string format = "text";
    };
    auto* sub = app.add_subcommand("kappa", "Weighted Cohen's kappa between annotation files");
    auto opt = std::make_shared<Opts>();
    sub->add_option("files", opt->files, "two or more annotation files (one label per line)")
        ->required()
        ->expected(2, -1);
    sub->add_option("--format", opt->format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt] {
        std::vector<std::vector<Interpretation>> annotators;
        for (auto& f : opt->files) annotators.push_back(read_interpretations(f));
        double k = annotators.size() == 2 ? weighted_kappa(annotators[0], annotators[1])
                                          : weighted_kappa_multi(annotators);
        if (opt->format == "json") {
            ordered_json j;
            j["kappa"] = k;
            j["annotators"] = annotators.size();
            j["items"] = annotators[0].size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "weighted kappa: " << fmt4(k) << " (" << annotators.size()
                      << " annotators, " << annotators[0].size() << " items)\n";
        }
    });
}

void setup_audit(CLI::App& app, std::shared_ptr<RunConfig> cfg) {
    auto* sub = app.add_subcommand("audit", "Sample audit sheets and score judged ones");
    sub->require_subcommand(1);

    struct SampleOpts {
        std::string in, type = "interpretation", out;
        std::size_t n = 100;
    };
    auto* sample = sub->add_subcommand("sample", "Draw a blank audit sheet from instances");
    auto sopt = std::make_shared<SampleOpts>();
    sample->add_option("--in", sopt->in, "mined instances (JSONL)")->required();
    sample->add_option("--type", sopt->type, "question-detection|interpretation");
    sample->add_option("--n", sopt->n, "sample size")->required();
    sample->add_option("--out", sopt->out, "audit sheet (TSV)")->required();
    sample->callback([sopt, cfg] {
        AuditType type = audit_type_from_name(sopt->type);
        std::vector<AuditRow> rows;
        std::size_t line_no = 0;
        for (auto& line : read_lines(sopt->in)) {
            ++line_no;
            ordered_json j;
            try {
                j = ordered_json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw DataError(sopt->in + ":" + std::to_string(line_no) + ": " + e.what());
            }
            AuditRow row;
            row.id = j.value("id", "line-" + std::to_string(line_no));
            row.question = j.value("question", "");
            row.answer = j.value("answer", "");
            row.machine = type == AuditType::Interpretation ? j.value("label", "") : "yes-no";
            rows.push_back(std::move(row));
        }
        auto sheet = make_audit_sheet(rows, sopt->n, cfg->seed, type);
        write_audit_sheet(sheet, sopt->out);
        std::cerr << "wrote " << sheet.rows.size() << " rows to " << sopt->out << "\n";
    });

    struct ScoreOpts {
        std::string sheet, out, format = "text";
    };
    auto* sc = sub->add_subcommand("score", "Score a judged audit sheet");
    auto copt = std::make_shared<ScoreOpts>();
    sc->add_option("--sheet", copt->sheet, "judged audit sheet (TSV)")->required();
    sc->add_option("--out", copt->out, "report file (default: stdout)");
    sc->add_option("--format", copt->format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sc->callback([copt] {
        auto sheet = read_audit_sheet(copt->sheet);
        auto s = score_audit(sheet);
        if (copt->format == "json") {
            ordered_json j;
            j["type"] = std::string(audit_type_name(sheet.type));
            j["n"] = s.n;
            j["agreed"] = s.agreed;
            j["precision"] = s.precision;
            if (!s.per_class.empty()) {
                j["per_class"] = ordered_json::object();
                for (auto& [label, at] : s.per_class) {
                    ordered_json e;
                    e["agreed"] = at.first;
                    e["total"] = at.second;
                    j["per_class"][label] = e;
                }
            }
            emit_report(copt->out, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "audit type: " << audit_type_name(sheet.type) << "\n"
               << "rows: " << s.n << "\n"
               << "agreed: " << s.agreed << "\n"
               << "precision: " << fmt4(s.precision) << "\n";
            for (auto& [label, at] : s.per_class)
                os << "  " << label << ": " << at.first << "/" << at.second << "\n";
            emit_report(copt->out, os.str());
        }
    });
}

void setup_stats(CLI::App& app) {
    struct Opts {
        std::string in, format = "text";
    };
    auto* sub = app.add_subcommand("stats", "Label distribution of an instance or label file");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--in", opt->in, "JSONL with a 'label' field, or one label per line")
        ->required();
    sub->add_option("--format", opt->format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([opt] {
        std::vector<Interpretation> labels;
        std::size_t line_no = 0;
        for (auto& line : read_lines(opt->in)) {
            ++line_no;
            std::string label = uni::trim(line);
            try {
                auto j = ordered_json::parse(line);
                if (j.is_object() && j.contains("label")) label = j["label"].get<std::string>();
            } catch (const nlohmann::json::exception&) {
                // plain label-per-line file
            }
            try {
                labels.push_back(interpretation_from_string(label));
            } catch (const DataError& e) {
                throw DataError(opt->in + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
        auto dist = label_distribution(labels);
        if (opt->format == "json") {
            ordered_json j;
            j["n"] = labels.size();
            for (auto& [label, s] : dist) {
                ordered_json e;
                e["count"] = s.count;
                e["fraction"] = s.fraction;
                j[std::string(to_string(label))] = e;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "n: " << labels.size() << "\n";
            for (auto& [label, s] : dist)
                std::cout << to_string(label) << ": " << s.count << " (" << fmt4(s.fraction)
                          << ")\n";
        }
    });
}

void setup_similarity(CLI::App& app) {
    struct Opts {
        std::string vectors, eval, sup, out;
    };
    auto* sub = app.add_subcommand("similarity", "Rank language pairs by typological cosine");
    auto opt = std::make_shared<Opts>();
    sub->add_option("--vectors", opt->vectors, "feature vector table (TSV)")->required();
    sub->add_option("--eval", opt->eval, "evaluation language codes (comma-separated)")
        ->required();
    sub->add_option("--sup", opt->sup, "supervision language codes (comma-separated)")
        ->required();
    sub->add_option("--out", opt->out, "similarity table (default: stdout)");
    sub->callback([opt] {
        auto table = load_vectors(opt->vectors);
        auto ranked = rank_pairs(table, split_commas(opt->eval), split_commas(opt->sup));
        std::string text = "eval\tsup\tsimilarity\n";
        for (auto& r : ranked)
            text += r.eval_lang + "\t" + r.sup_lang + "\t" + fmt6(r.similarity) + "\n";
        emit_report(opt->out, text);
    });
}

void setup_pack(CLI::App& app) {
    auto* sub = app.add_subcommand("pack", "Inspect and export rule packs");
    sub->require_subcommand(1);

    struct ShowOpts {
        std::string language, file;
    };
    auto* show = sub->add_subcommand("show", "Print every rule and keyword of a pack");
    auto shopt = std::make_shared<ShowOpts>();
    show->add_option("language", shopt->language, "built-in pack code");
    show->add_option("--file", shopt->file, "read the pack from a JSON file instead");
    show->callback([shopt] {
        if (shopt->language.empty() == shopt->file.empty())
            throw UsageError("pack show: give a language code or --file, not both");
        RulePack pack =
            shopt->file.empty() ? resolve_pack(shopt->language) : load_pack(shopt->file);
        std::cout << pack_describe(pack);
    });

    struct ExportOpts {
        std::string language, out;
    };
    auto* exp = sub->add_subcommand("export", "Write a built-in pack as editable JSON");
    auto exopt = std::make_shared<ExportOpts>();
    exp->add_option("language", exopt->language, "built-in pack code")->required();
    exp->add_option("--out", exopt->out, "output JSON file")->required();
    exp->callback([exopt] {
        RulePack pack = resolve_pack(exopt->language);
        write_text(exopt->out, pack_to_string(pack));
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilingual yes/no question mining and evaluation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    auto cfg = std::make_shared<RunConfig>();
    app.add_option("--seed", cfg->seed, "seed for all sampling (default 0)");

    setup_mine(app);
    setup_map_labels(app);
    setup_blend(app, cfg);
    setup_greedy(app, cfg);
    setup_mcnemar(app);
    setup_score(app);
    setup_split(app, cfg);
    setup_kappa(app);
    setup_audit(app, cfg);
    setup_stats(app);
    setup_similarity(app);
    setup_pack(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const polarqa::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const polarqa::EvaluatorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const polarqa::Error& e) {  // data, config, io
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
