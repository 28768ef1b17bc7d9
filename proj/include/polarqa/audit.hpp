#pragma once

// Audit sheets: export a seeded sample of machine decisions as TSV, a human
// fills the last column, and scoring turns the completed sheet into rule
// precision.

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/rng.hpp"

namespace polarqa {

enum class AuditType { QuestionDetection, Interpretation };

inline std::string_view audit_type_name(AuditType t) {
    return t == AuditType::QuestionDetection ? "question-detection" : "interpretation";
}

inline AuditType audit_type_from_name(std::string_view s) {
    if (s == "question-detection") return AuditType::QuestionDetection;
    if (s == "interpretation") return AuditType::Interpretation;
    throw UsageError("unknown audit type: '" + std::string(s) +
                     "' (supported: question-detection interpretation)");
}

// Human-judgment vocabulary per audit type.
inline const std::set<std::string>& audit_vocabulary(AuditType t) {
    static const std::set<std::string> question = {"yes-no", "not-yes-no"};
    static const std::set<std::string> interpretation = {"yes", "no", "middle"};
    return t == AuditType::QuestionDetection ? question : interpretation;
}

struct AuditRow {
    std::string id;
    std::string question;
    std::string answer;
    std::string machine;  // machine judgment being audited
    std::string human;    // empty until the sheet comes back
};

struct AuditSheet {
    AuditType type = AuditType::QuestionDetection;
    std::vector<AuditRow> rows;
};

namespace detail {

// TSV cells cannot carry tabs or newlines; audit text is for human review,
// the id links back to the full record.
inline std::string tsv_cell(std::string s) {
    for (auto& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace detail

inline AuditSheet make_audit_sheet(const std::vector<AuditRow>& items, std::size_t n,
                                   std::uint64_t seed, AuditType type) {
    if (n > items.size())
        throw DataError("audit sample of " + std::to_string(n) + " requested but only " +
                        std::to_string(items.size()) + " items available");
    std::set<std::string> ids;
    for (auto& row : items)
        if (!ids.insert(row.id).second)
            throw DataError("audit items: duplicate id '" + row.id + "'");

    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Rng rng(seed);
    rng.shuffle(idx);

    AuditSheet sheet;
    sheet.type = type;
    for (std::size_t i = 0; i < n; ++i) {
        AuditRow row = items[idx[i]];
        row.human.clear();  // the sheet always goes out blank
        sheet.rows.push_back(std::move(row));
    }
    return sheet;
}

inline void write_audit_sheet(const AuditSheet& sheet, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write: " + path);
    out << "# audit-type: " << audit_type_name(sheet.type) << "\n";
    out << "id\tquestion\tanswer\tmachine\thuman\n";
    for (auto& r : sheet.rows)
        out << detail::tsv_cell(r.id) << "\t" << detail::tsv_cell(r.question) << "\t"
            << detail::tsv_cell(r.answer) << "\t" << detail::tsv_cell(r.machine) << "\t"
            << detail::tsv_cell(r.human) << "\n";
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

inline AuditSheet read_audit_sheet(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open audit sheet: " + path);
    AuditSheet sheet;
    std::string line;
    std::size_t line_no = 0;
    bool have_type = false, have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("# audit-type: ", 0) == 0) {
            sheet.type = audit_type_from_name(line.substr(14));
            have_type = true;
            continue;
        }
        if (!have_header) {
            if (line.rfind("id\t", 0) != 0)
                throw DataError(path + ":" + std::to_string(line_no) + ": expected header row");
            have_header = true;
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                cells.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (cells.size() != 5)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected 5 columns, got " +
                            std::to_string(cells.size()));
        sheet.rows.push_back({cells[0], cells[1], cells[2], cells[3], cells[4]});
    }
    if (!have_type) throw DataError(path + ": missing '# audit-type:' line");
    if (!have_header) throw DataError(path + ": missing header row");
    return sheet;
}

struct AuditScore {
    std::size_t n = 0;
    std::size_t agreed = 0;
    double precision = 0.0;
    // machine label → (agreed, total); interpretation audits only
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_class;
};

// Question-detection precision = #(human says yes-no)/n; interpretation
// precision = #(human label == machine label)/n. Every row must be judged.
inline AuditScore score_audit(const AuditSheet& sheet) {
    std::vector<std::string> missing, unknown;
    const auto& vocab = audit_vocabulary(sheet.type);
    for (auto& r : sheet.rows) {
        if (r.human.empty())
            missing.push_back(r.id);
        else if (!vocab.count(r.human))
            unknown.push_back(r.id + "='" + r.human + "'");
    }
    if (!missing.empty()) {
        std::string msg = "audit sheet has unjudged rows:";
        for (auto& id : missing) msg += " " + id;
        throw DataError(msg);
    }
    if (!unknown.empty()) {
        std::string msg = "audit sheet has out-of-vocabulary judgments:";
        for (auto& u : unknown) msg += " " + u;
        throw DataError(msg);
    }

    AuditScore s;
    s.n = sheet.rows.size();
    for (auto& r : sheet.rows) {
        bool ok = sheet.type == AuditType::QuestionDetection ? r.human == "yes-no"
                                                             : r.human == r.machine;
        if (ok) ++s.agreed;
        if (sheet.type == AuditType::Interpretation) {
            auto& [agreed, total] = s.per_class[r.machine];
            ++total;
            if (ok) ++agreed;
        }
    }
    s.precision = s.n ? static_cast<double>(s.agreed) / static_cast<double>(s.n) : 0.0;
    return s;
}

}  // namespace polarqa
