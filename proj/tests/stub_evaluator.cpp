// Scripted stand-in for a real training/evaluation subprocess. Speaks the
// evaluator wire protocol: one JSON request line on stdin, one JSON response
// line on stdout. The score (or misbehavior) comes from a lookup table so
// tests can stage arbitrary search landscapes and failure modes.
//
//   stub-evaluator <table.tsv> [attempt-log]
//
// Table rows are <key>\t<value>; the key is the '+'-joined sorted dataset ids
// from the train manifest ("-" for an empty set). Values: a number is echoed
// verbatim as {"score": <value>}, "fail" exits 1, "garbage" prints non-JSON,
// "slow" sleeps for 10 seconds first. Every invocation appends its key to the
// attempt log when one is given.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::cerr << "usage: stub-evaluator <table.tsv> [attempt-log]\n";
        return 64;
    }

    std::map<std::string, std::string> table;
    {
        std::ifstream in(argv[1]);
        if (!in) {
            std::cerr << "stub-evaluator: cannot open table " << argv[1] << "\n";
            return 66;
        }
        std::string line;
        while (std::getline(in, line)) {
            auto tab = line.find('\t');
            if (tab == std::string::npos) continue;
            table[line.substr(0, tab)] = line.substr(tab + 1);
        }
    }

    std::string request;
    if (!std::getline(std::cin, request)) {
        std::cerr << "stub-evaluator: no request on stdin\n";
        return 65;
    }
    std::string manifest_path;
    try {
        auto j = nlohmann::json::parse(request);
        manifest_path = j.at("train_manifest").get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "stub-evaluator: bad request: " << e.what() << "\n";
        return 65;
    }

    std::vector<std::string> ids;
    {
        std::ifstream in(manifest_path);
        if (!in) {
            std::cerr << "stub-evaluator: cannot open manifest " << manifest_path << "\n";
            return 66;
        }
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ids.push_back(line);
    }
    std::sort(ids.begin(), ids.end());
    std::string key;
    if (ids.empty()) {
        key = "-";
    } else {
        for (auto& id : ids) {
            if (!key.empty()) key += "+";
            key += id;
        }
    }

    if (argc == 3) {
        std::ofstream log(argv[2], std::ios::app);
        log << key << "\n";
    }

    auto it = table.find(key);
    if (it == table.end()) {
        std::cerr << "stub-evaluator: no table entry for '" << key << "'\n";
        return 3;
    }
    const std::string& action = it->second;
    if (action == "fail") return 1;
    if (action == "garbage") {
        std::cout << "mush, not a json object\n";
        return 0;
    }
    if (action == "slow") std::this_thread::sleep_for(std::chrono::seconds(10));
    std::cout << "{\"score\": " << (action == "slow" ? "0.5" : action) << "}\n";
    return 0;
}
