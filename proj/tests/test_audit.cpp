#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "polarqa/audit.hpp"

using namespace polarqa;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<AuditRow> pool(std::size_t n) {
    std::vector<AuditRow> rows;
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back({"q" + std::to_string(i) + "/a" + std::to_string(i),
                        "question " + std::to_string(i), "answer " + std::to_string(i),
                        i % 2 ? "yes" : "no", "stale judgment"});
    return rows;
}

}  // namespace

TEST_CASE("sampling draws n unique rows and blanks the human column") {
    auto items = pool(5000);
    auto sheet = make_audit_sheet(items, 200, 1, AuditType::Interpretation);
    REQUIRE(sheet.rows.size() == 200);
    std::set<std::string> ids;
    for (auto& r : sheet.rows) {
        CHECK(r.human.empty());
        CHECK(ids.insert(r.id).second);
        CHECK_FALSE(r.question.empty());
    }
    auto again = make_audit_sheet(items, 200, 1, AuditType::Interpretation);
    for (std::size_t i = 0; i < 200; ++i) CHECK(sheet.rows[i].id == again.rows[i].id);
    auto other = make_audit_sheet(items, 200, 2, AuditType::Interpretation);
    bool same_order = true;
    for (std::size_t i = 0; i < 200; ++i)
        if (sheet.rows[i].id != other.rows[i].id) same_order = false;
    CHECK_FALSE(same_order);
}

TEST_CASE("sampling validates its inputs") {
    auto items = pool(10);
    CHECK(make_audit_sheet(items, 0, 0, AuditType::QuestionDetection).rows.empty());
    CHECK_THROWS_WITH(make_audit_sheet(items, 11, 0, AuditType::Interpretation),
                      ContainsSubstring("11") && ContainsSubstring("10"));
    items.push_back(items.front());
    CHECK_THROWS_WITH(make_audit_sheet(items, 2, 0, AuditType::Interpretation),
                      ContainsSubstring("duplicate id"));
}

TEST_CASE("sheets survive a write/read round trip") {
    testutil::TempDir dir;
    AuditSheet sheet;
    sheet.type = AuditType::QuestionDetection;
    sheet.rows = {{"c1/q1", "gelir misin?", "evet", "yes-no", ""},
                  {"c2/q9", "nerede?", "orada", "not-yes-no", "yes-no"}};
    auto path = dir.file("sheet.tsv");
    write_audit_sheet(sheet, path);

    auto text = testutil::read_file(path);
    CHECK(text.rfind("# audit-type: question-detection\n", 0) == 0);
    CHECK(text.find("id\tquestion\tanswer\tmachine\thuman\n") != std::string::npos);

    auto back = read_audit_sheet(path);
    CHECK(back.type == AuditType::QuestionDetection);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0].id == "c1/q1");
    CHECK(back.rows[0].question == "gelir misin?");
    CHECK(back.rows[1].human == "yes-no");
}

TEST_CASE("tabs and newlines in text are flattened to spaces") {
    testutil::TempDir dir;
    AuditSheet sheet;
    sheet.type = AuditType::Interpretation;
    sheet.rows = {{"id1", "two\tcolumns?\nno", "an\tswer", "yes", ""}};
    auto path = dir.file("sheet.tsv");
    write_audit_sheet(sheet, path);
    auto back = read_audit_sheet(path);
    REQUIRE(back.rows.size() == 1);
    CHECK(back.rows[0].question == "two columns? no");
    CHECK(back.rows[0].answer == "an swer");
}

TEST_CASE("malformed sheets are reported with their line") {
    testutil::TempDir dir;
    auto p1 = dir.file("no-type.tsv");
    testutil::write_file(p1, "id\tquestion\tanswer\tmachine\thuman\n");
    CHECK_THROWS_WITH(read_audit_sheet(p1), ContainsSubstring("audit-type"));

    auto p2 = dir.file("short-row.tsv");
    testutil::write_file(p2,
                         "# audit-type: interpretation\n"
                         "id\tquestion\tanswer\tmachine\thuman\n"
                         "x\tonly\tfour\tcells\n");
    CHECK_THROWS_WITH(read_audit_sheet(p2), ContainsSubstring(":3:"));

    CHECK_THROWS_AS(read_audit_sheet(dir.file("absent.tsv")), IoError);
}

TEST_CASE("question-detection precision counts yes-no judgments") {
    AuditSheet sheet;
    sheet.type = AuditType::QuestionDetection;
    for (int i = 0; i < 200; ++i)
        sheet.rows.push_back({"id" + std::to_string(i), "q", "a", "yes-no",
                              i < 196 ? "yes-no" : "not-yes-no"});
    auto s = score_audit(sheet);
    CHECK(s.n == 200);
    CHECK(s.agreed == 196);
    CHECK(s.precision == 0.98);
    CHECK(s.per_class.empty());

    for (auto& r : sheet.rows) r.human = "yes-no";
    CHECK(score_audit(sheet).precision == 1.0);
}

TEST_CASE("interpretation precision compares human against machine") {
    AuditSheet sheet;
    sheet.type = AuditType::Interpretation;
    // 130 agreements out of 200: 80/100 on yes, 50/100 on no
    for (int i = 0; i < 100; ++i)
        sheet.rows.push_back({"y" + std::to_string(i), "q", "a", "yes",
                              i < 80 ? "yes" : "middle"});
    for (int i = 0; i < 100; ++i)
        sheet.rows.push_back({"n" + std::to_string(i), "q", "a", "no",
                              i < 50 ? "no" : "yes"});
    auto s = score_audit(sheet);
    CHECK(s.n == 200);
    CHECK(s.agreed == 130);
    CHECK(s.precision == 0.65);
    CHECK(s.per_class.at("yes") == std::make_pair(std::size_t{80}, std::size_t{100}));
    CHECK(s.per_class.at("no") == std::make_pair(std::size_t{50}, std::size_t{100}));
}

TEST_CASE("scoring refuses incomplete or out-of-vocabulary sheets") {
    AuditSheet sheet;
    sheet.type = AuditType::Interpretation;
    sheet.rows = {{"a1", "q", "a", "yes", "yes"},
                  {"a2", "q", "a", "no", ""},
                  {"a3", "q", "a", "yes", ""}};
    CHECK_THROWS_WITH(score_audit(sheet),
                      ContainsSubstring("a2") && ContainsSubstring("a3"));

    sheet.rows[1].human = "maybe";
    sheet.rows[2].human = "yes";
    CHECK_THROWS_WITH(score_audit(sheet),
                      ContainsSubstring("a2") && ContainsSubstring("maybe"));

    // question-detection vocabulary differs from interpretation's
    sheet.type = AuditType::QuestionDetection;
    sheet.rows = {{"a1", "q", "a", "yes-no", "yes"}};
    CHECK_THROWS_AS(score_audit(sheet), DataError);
}

TEST_CASE("audit type names round trip") {
    CHECK(audit_type_from_name(audit_type_name(AuditType::QuestionDetection)) ==
          AuditType::QuestionDetection);
    CHECK(audit_type_from_name(audit_type_name(AuditType::Interpretation)) ==
          AuditType::Interpretation);
    CHECK_THROWS_AS(audit_type_from_name("vibes"), UsageError);
}
