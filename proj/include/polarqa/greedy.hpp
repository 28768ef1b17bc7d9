#pragma once

// Greedy forward selection over auxiliary datasets, scored by an external
// evaluator subprocess. Wire protocol: one JSON request line on the child's
// stdin {"train_manifest":...,"validation":...,"seed":...}, one JSON response
// line {"score": s} with s in [0,1] on its stdout.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/rule_io.hpp"  // ordered_json

namespace polarqa {

struct EvaluatorSpec {
    std::vector<std::string> command;  // executable plus arguments
    double timeout_seconds = 60.0;
    int retries = 2;  // additional attempts after the first failure
};

struct EvalRequest {
    std::string train_manifest;
    std::string validation;
    std::uint64_t seed = 0;
};

namespace detail {

// One evaluator attempt: spawn, write the request line, read stdout until EOF
// under a deadline, require exit 0 and a well-formed score.
inline double evaluator_attempt(const EvaluatorSpec& spec, const std::string& request_line) {
    // a child that exits before reading its stdin must not SIGPIPE us
    signal(SIGPIPE, SIG_IGN);
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
        throw EvaluatorError("evaluator: cannot create pipes");

    pid_t pid = fork();
    if (pid < 0) throw EvaluatorError("evaluator: fork failed");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        std::vector<char*> argv;
        for (auto& a : spec.command) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        execvp(argv[0], argv.data());
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);

    // write the single request record, then close stdin
    std::size_t off = 0;
    while (off < request_line.size()) {
        ssize_t w = write(to_child[1], request_line.data() + off, request_line.size() - off);
        if (w < 0) break;  // child may exit early; the read side decides
        off += static_cast<std::size_t>(w);
    }
    close(to_child[1]);

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double>(spec.timeout_seconds);
    std::string output;
    char buf[4096];
    bool timed_out = false;
    for (;;) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                        deadline - std::chrono::steady_clock::now())
                        .count();
        if (left <= 0) {
            timed_out = true;
            break;
        }
        pollfd pfd{from_child[0], POLLIN, 0};
        int pr = poll(&pfd, 1, static_cast<int>(left));
        if (pr < 0) break;
        if (pr == 0) {
            timed_out = true;
            break;
        }
        ssize_t r = read(from_child[0], buf, sizeof buf);
        if (r <= 0) break;  // EOF or error
        output.append(buf, static_cast<std::size_t>(r));
    }
    close(from_child[0]);

    if (timed_out) {
        kill(pid, SIGKILL);
        waitpid(pid, nullptr, 0);
        throw EvaluatorError("evaluator timed out after " + std::to_string(spec.timeout_seconds) +
                             "s");
    }
    int status = 0;
    waitpid(pid, &status, 0);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw EvaluatorError("evaluator exited with status " +
                             std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));

    auto nl = output.find('\n');
    const std::string line = nl == std::string::npos ? output : output.substr(0, nl);
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw EvaluatorError("evaluator response is not valid JSON: '" + line + "'");
    }
    if (!j.is_object() || !j.contains("score") || !j["score"].is_number())
        throw EvaluatorError("evaluator response missing numeric 'score': '" + line + "'");
    double score = j["score"].get<double>();
    if (score < 0.0 || score > 1.0)
        throw EvaluatorError("evaluator score " + std::to_string(score) + " outside [0,1]");
    return score;
}

}  // namespace detail

inline double run_evaluator(const EvaluatorSpec& spec, const EvalRequest& req) {
    if (spec.command.empty()) throw ConfigError("evaluator: empty command");
    if (spec.timeout_seconds <= 0.0) throw ConfigError("evaluator: timeout must be positive");
    ordered_json j;
    j["train_manifest"] = req.train_manifest;
    j["validation"] = req.validation;
    j["seed"] = req.seed;
    const std::string request_line = j.dump() + "\n";

    std::string last_error;
    for (int attempt = 0; attempt <= spec.retries; ++attempt) {
        try {
            return detail::evaluator_attempt(spec, request_line);
        } catch (const EvaluatorError& e) {
            last_error = e.what();
        }
    }
    throw EvaluatorError(last_error + " (after " + std::to_string(spec.retries + 1) +
                         " attempts)");
}

struct SearchStep {
    std::vector<std::string> dataset_ids;  // sorted
    double score = 0.0;
    std::size_t round = 0;  // 0 = base evaluation
};

struct SearchState {
    std::vector<std::string> base_set;
    std::vector<std::string> remaining;  // candidates never adopted
    std::vector<SearchStep> history;     // every evaluator call, in order
    SearchStep best;
    bool aborted = false;  // evaluator gave out; history is partial
    std::string error;
};

namespace detail {

inline std::string write_set_manifest(const std::string& work_dir, std::size_t eval_index,
                                      const std::vector<std::string>& ids) {
    std::error_code ec;
    std::filesystem::create_directories(work_dir, ec);
    if (ec) throw IoError("cannot create directory " + work_dir + ": " + ec.message());
    const std::string path =
        (std::filesystem::path(work_dir) / ("eval-" + std::to_string(eval_index) + ".manifest"))
            .string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write: " + path);
    for (auto& id : ids) out << id << "\n";
    out.flush();
    if (!out) throw IoError("write failed: " + path);
    return path;
}

}  // namespace detail

// Forward selection: score base ∪ {c} for every remaining candidate, adopt
// the argmax only on strict improvement (ties to the lexicographically
// smallest id), stop when nothing improves. Every evaluation lands in
// history; an evaluator failure aborts with partial history.
inline SearchState greedy_select(const std::vector<std::string>& base,
                                 const std::vector<std::string>& candidates,
                                 const EvaluatorSpec& spec, std::uint64_t seed,
                                 const std::string& work_dir,
                                 const std::string& validation_path = "") {
    if (candidates.empty()) throw DataError("greedy selection needs at least one candidate");

    SearchState st;
    st.base_set = base;
    std::sort(st.base_set.begin(), st.base_set.end());
    st.remaining = candidates;
    std::sort(st.remaining.begin(), st.remaining.end());
    st.remaining.erase(std::unique(st.remaining.begin(), st.remaining.end()),
                       st.remaining.end());

    auto evaluate = [&](const std::vector<std::string>& ids, std::size_t round) -> double {
        const std::string manifest =
            detail::write_set_manifest(work_dir, st.history.size() + 1, ids);
        double s = run_evaluator(spec, {manifest, validation_path, seed});
        st.history.push_back({ids, s, round});
        return s;
    };

    std::vector<std::string> incumbent = st.base_set;
    double incumbent_score;
    try {
        incumbent_score = evaluate(incumbent, 0);
        std::size_t round = 0;
        while (!st.remaining.empty()) {
            ++round;
            double best_score = -1.0;
            std::string best_id;
            for (auto& c : st.remaining) {  // lexicographic order: ties keep the first
                std::vector<std::string> trial = incumbent;
                trial.insert(std::lower_bound(trial.begin(), trial.end(), c), c);
                double s = evaluate(trial, round);
                if (s > best_score) {
                    best_score = s;
                    best_id = c;
                }
            }
            if (best_score <= incumbent_score) break;  // strict improvement required
            incumbent.insert(std::lower_bound(incumbent.begin(), incumbent.end(), best_id),
                             best_id);
            incumbent_score = best_score;
            st.remaining.erase(
                std::find(st.remaining.begin(), st.remaining.end(), best_id));
        }
    } catch (const EvaluatorError& e) {
        st.aborted = true;
        st.error = e.what();
        if (!st.history.empty()) {
            st.best = *std::max_element(
                st.history.begin(), st.history.end(),
                [](const SearchStep& a, const SearchStep& b) { return a.score < b.score; });
        }
        return st;
    }
    st.best = {incumbent, incumbent_score, 0};
    for (auto& h : st.history)
        if (h.dataset_ids == incumbent) st.best.round = h.round;
    return st;
}

inline ordered_json search_state_to_json(const SearchState& st) {
    ordered_json j;
    j["base"] = st.base_set;
    j["selected"] = st.best.dataset_ids;
    j["score"] = st.best.score;
    j["aborted"] = st.aborted;
    if (st.aborted) j["error"] = st.error;
    j["history"] = ordered_json::array();
    for (auto& h : st.history) {
        ordered_json e;
        e["round"] = h.round;
        e["datasets"] = h.dataset_ids;
        e["score"] = h.score;
        j["history"].push_back(e);
    }
    return j;
}

}  // namespace polarqa
