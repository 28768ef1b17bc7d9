#pragma once

// Harmonizes the three English corpora's label vocabularies into
// {Yes, No, Middle, Discard}. Labels are matched case-sensitively after
// whitespace trimming; unknown labels are errors, never silent discards.

#include <map>
#include <string>
#include <vector>

#include "polarqa/corpus.hpp"
#include "polarqa/error.hpp"
#include "polarqa/unicode.hpp"

namespace polarqa {

enum class MappedLabel { Yes, No, Middle, Discard };

inline std::string_view to_string(MappedLabel v) {
    switch (v) {
        case MappedLabel::Yes: return "yes";
        case MappedLabel::No: return "no";
        case MappedLabel::Middle: return "middle";
        case MappedLabel::Discard: return "discard";
    }
    return "?";
}

struct MappingScheme {
    std::string name;
    std::vector<std::pair<std::string, MappedLabel>> table;  // ordered as documented
};

inline MappingScheme circa_relaxed_scheme() {
    return {"circa-relaxed",
            {
                {"Yes", MappedLabel::Yes},
                {"No", MappedLabel::No},
                {"Yes, subject to some conditions", MappedLabel::Yes},
                {"In the middle, neither yes nor no", MappedLabel::Middle},
                {"Other", MappedLabel::Discard},
                {"N/A", MappedLabel::Discard},
            }};
}

inline MappingScheme swda_ia_scheme() {
    return {"swda-ia",
            {
                {"Yes", MappedLabel::Yes},
                {"Probably Yes", MappedLabel::Yes},
                {"Middle", MappedLabel::Middle},
                {"Probably No", MappedLabel::No},
                {"No", MappedLabel::No},
            }};
}

inline MappingScheme friends_qia_scheme() {
    return {"friends-qia",
            {
                {"Yes", MappedLabel::Yes},
                {"No", MappedLabel::No},
                {"Yes, subject to some conditions", MappedLabel::Yes},
                {"Neither yes nor no", MappedLabel::Middle},
                {"Other", MappedLabel::Discard},
                {"N/A", MappedLabel::Discard},
            }};
}

inline std::vector<std::string> supported_schemes() {
    return {"circa-relaxed", "swda-ia", "friends-qia"};
}

inline MappingScheme mapping_scheme(std::string_view name) {
    if (name == "circa-relaxed") return circa_relaxed_scheme();
    if (name == "swda-ia") return swda_ia_scheme();
    if (name == "friends-qia") return friends_qia_scheme();
    std::string msg = "unknown mapping scheme: '" + std::string(name) + "' (supported:";
    for (auto& s : supported_schemes()) msg += " " + s;
    throw UsageError(msg + ")");
}

inline MappedLabel map_label(const MappingScheme& scheme, std::string_view original) {
    const std::string key = uni::trim(original);
    for (auto& [label, mapped] : scheme.table)
        if (label == key) return mapped;
    throw DataError("scheme '" + scheme.name + "': unknown label '" + key + "'");
}

// One English-corpus row before harmonization.
struct LabeledRow {
    std::string question;
    std::string answer;
    std::vector<std::string> context;
    std::string original_label;
};

struct LabeledPair {
    QAPair pair;
    Interpretation label = Interpretation::Yes;
};

struct ConversionStats {
    std::size_t input = 0;
    std::size_t emitted = 0;
    std::size_t dropped = 0;
    std::map<std::string, std::size_t> per_label;  // mapped-label name → count
};

// Applies the scheme over rows; Discard-mapped rows are dropped with a tally,
// unknown labels abort naming the 1-based row number.
inline std::pair<std::vector<LabeledPair>, ConversionStats> convert_corpus(
    const std::vector<LabeledRow>& rows, const MappingScheme& scheme,
    const std::string& language = "en") {
    std::vector<LabeledPair> out;
    ConversionStats stats;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ++stats.input;
        MappedLabel mapped;
        try {
            mapped = map_label(scheme, rows[i].original_label);
        } catch (const DataError& e) {
            throw DataError("row " + std::to_string(i + 1) + ": " + e.what());
        }
        ++stats.per_label[std::string(to_string(mapped))];
        if (mapped == MappedLabel::Discard) {
            ++stats.dropped;
            continue;
        }
        Interpretation label = mapped == MappedLabel::Yes  ? Interpretation::Yes
                               : mapped == MappedLabel::No ? Interpretation::No
                                                           : Interpretation::Middle;
        const std::string base = scheme.name + "-" + std::to_string(i + 1);
        Turn q = make_turn(base + "/q", rows[i].question, language);
        Turn a = make_turn(base + "/a", rows[i].answer, language);
        std::vector<Turn> ctx;
        for (std::size_t c = 0; c < rows[i].context.size(); ++c)
            ctx.push_back(make_turn(base + "/ctx" + std::to_string(c + 1), rows[i].context[c],
                                    language));
        LabeledPair lp;
        lp.pair = make_qa_pair(std::move(q), std::move(a), scheme.name, std::move(ctx));
        lp.label = label;
        out.push_back(std::move(lp));
        ++stats.emitted;
    }
    return {std::move(out), std::move(stats)};
}

}  // namespace polarqa
