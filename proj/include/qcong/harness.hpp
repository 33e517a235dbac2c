#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcong/congruence.hpp"

namespace qcong::harness {

// Parameter tuple of one sweep item; only the fields a case uses are set.
struct CaseParams {
    std::optional<int64_t> n, d, r, s, p, k;
    friend auto operator<=>(const CaseParams&, const CaseParams&) = default;
    std::string str() const;  // "n=3 d=2 r=1"
};

// Per-field replacement of a case's default parameter ranges. Values that
// violate case constraints produce Skipped reports, never silent filtering.
struct Overrides {
    std::optional<std::vector<int64_t>> n, d, r, s, p, k;
};

struct Report {
    std::string case_id;
    CaseParams params;
    std::string modulus;
    congruence::Status status = congruence::Status::verified;
    std::string reason;
    std::string witness;
    std::vector<std::string> strategy;
    double ms = 0.0;
};

struct CongruenceCase {
    std::string id;
    std::string title;
    std::string provenance;  // statement label with a verbatim quote anchor
    bool hidden = false;     // fixtures run only when named explicitly
    std::function<std::vector<CaseParams>(const Overrides&)> domain;
    std::function<Report(const CaseParams&)> run;
};

// The built-in catalog. Stable order, unique ids.
const std::vector<CongruenceCase>& registry();
// nullptr when the id is unknown.
const CongruenceCase* find_case(const std::string& id);

struct Summary {
    int64_t verified = 0, failed = 0, skipped = 0;
    int64_t total() const { return verified + failed + skipped; }
};
Summary summarize(const std::vector<Report>& reports);

// Evaluates the selected cases over their (optionally overridden) parameter
// domains on a bounded worker pool. The report list is sorted by case id then
// parameters and is identical across worker counts except for the ms field.
// Throws std::invalid_argument on an unknown case id.
std::vector<Report> run_sweep(const std::vector<std::string>& case_ids, const Overrides& ov,
                              int workers);

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string reports_to_json_text(const std::vector<Report>& reports);
std::string reports_to_csv(const std::vector<Report>& reports);

}  // namespace qcong::harness
