#pragma once

// Typological language similarity: cosine over feature vectors with missing
// values handled by dimension intersection (never zero-fill, since zero is a
// meaningful feature value).

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/unicode.hpp"

namespace polarqa {

struct LangVector {
    std::string language;
    std::vector<std::optional<double>> features;  // shared ordering across a table
};

struct VectorTable {
    std::vector<std::string> feature_ids;
    std::map<std::string, LangVector> vectors;
};

// Tab-separated table: header "lang<TAB>feature...", one row per language,
// missing cells marked "--". Values must lie in [0,1].
inline VectorTable load_vectors(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vector table: " + path);

    auto split_tabs = [](const std::string& line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == '\t') {
                cells.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        return cells;
    };

    VectorTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (uni::trim(line).empty() || line[0] == '#') continue;
        auto cells = split_tabs(line);
        if (table.feature_ids.empty()) {
            if (cells.size() < 2)
                throw DataError(path + ": header needs a language column and 1+ features");
            table.feature_ids.assign(cells.begin() + 1, cells.end());
            continue;
        }
        if (cells.size() != table.feature_ids.size() + 1)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected " +
                            std::to_string(table.feature_ids.size() + 1) + " columns, got " +
                            std::to_string(cells.size()));
        LangVector v;
        v.language = uni::trim(cells[0]);
        if (table.vectors.count(v.language))
            throw DataError(path + ":" + std::to_string(line_no) + ": duplicate language row '" +
                            v.language + "'");
        bool any = false;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            const std::string cell = uni::trim(cells[i]);
            if (cell == "--") {
                v.features.push_back(std::nullopt);
                continue;
            }
            double x;
            try {
                x = std::stod(cell);
            } catch (const std::exception&) {
                throw DataError(path + ":" + std::to_string(line_no) + ": bad value '" + cell +
                                "'");
            }
            if (x < 0.0 || x > 1.0)
                throw DataError(path + ":" + std::to_string(line_no) + ": feature value " + cell +
                                " outside [0,1]");
            v.features.push_back(x);
            any = true;
        }
        if (!any)
            throw DataError(path + ":" + std::to_string(line_no) + ": language '" + v.language +
                            "' has no feature values");
        table.vectors.emplace(v.language, std::move(v));
    }
    if (table.feature_ids.empty()) throw DataError(path + ": empty vector table");
    return table;
}

// Cosine over the dimensions that are present in both vectors.
inline double cosine_similarity(const LangVector& a, const LangVector& b) {
    if (a.features.size() != b.features.size())
        throw DataError("cosine: vectors for '" + a.language + "' and '" + b.language +
                        "' have different dimensionality");
    double dot = 0.0, na = 0.0, nb = 0.0;
    std::size_t shared = 0;
    for (std::size_t i = 0; i < a.features.size(); ++i) {
        if (!a.features[i] || !b.features[i]) continue;
        ++shared;
        dot += *a.features[i] * *b.features[i];
        na += *a.features[i] * *a.features[i];
        nb += *b.features[i] * *b.features[i];
    }
    if (shared == 0)
        throw DataError("cosine: '" + a.language + "' and '" + b.language +
                        "' share no feature dimensions");
    if (na == 0.0 || nb == 0.0)
        throw DataError("cosine: zero-norm projection for '" +
                        (na == 0.0 ? a.language : b.language) + "'");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

struct RankedPair {
    std::string eval_lang;
    std::string sup_lang;
    double similarity = 0.0;
};

// All (evaluation, supervision) cross pairs, most similar first; ties by code
// order.
inline std::vector<RankedPair> rank_pairs(const VectorTable& table,
                                          const std::vector<std::string>& eval_langs,
                                          const std::vector<std::string>& sup_langs) {
    auto vec = [&](const std::string& code) -> const LangVector& {
        auto it = table.vectors.find(code);
        if (it == table.vectors.end())
            throw DataError("no vector for language '" + code + "' in the table");
        return it->second;
    };
    std::vector<RankedPair> out;
    for (auto& e : eval_langs)
        for (auto& s : sup_langs) out.push_back({e, s, cosine_similarity(vec(e), vec(s))});
    std::stable_sort(out.begin(), out.end(), [](const RankedPair& x, const RankedPair& y) {
        if (x.similarity != y.similarity) return x.similarity > y.similarity;
        if (x.eval_lang != y.eval_lang) return x.eval_lang < y.eval_lang;
        return x.sup_lang < y.sup_lang;
    });
    return out;
}

}  // namespace polarqa
