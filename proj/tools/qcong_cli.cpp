// Command-line front end: verification sweeps over the case registry,
// single-case checks, classical identity suites, and registry listing.
//
// Exit codes: 0 when every executed check is verified or skipped (with its
// reason recorded), 1 when any check fails, 2 on usage errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "qcong/harness.hpp"
#include "qcong/sums.hpp"

namespace {

using namespace qcong;
using harness::Overrides;
using harness::Report;

std::vector<int64_t> parse_range(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        std::size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
        return v;
    };
    auto dots = text.find("..");
    if (dots != std::string::npos && dots > 0) {
        int64_t lo = parse_int(text.substr(0, dots));
        int64_t hi = parse_int(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
        std::vector<int64_t> v;
        for (int64_t i = lo; i <= hi; ++i) v.push_back(i);
        return v;
    }
    std::vector<int64_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_int(item));
    if (v.empty()) throw std::invalid_argument("empty selector '" + text + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) v.push_back(item);
    }
    return v;
}

// Output files are written to a temp path and renamed so partial artifacts
// never appear under the final name.
void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

std::string table_of(const std::vector<Report>& reports, bool verbose) {
    std::ostringstream os;
    os << "CASE              PARAMS                MODULUS                           STATUS    MS\n";
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s + " ";
    };
    std::string current;
    harness::Summary per;
    auto flush_case = [&os, &current, &per]() {
        if (current.empty()) return;
        os << "-- " << current << ": " << per.verified << " verified, " << per.failed
           << " failed, " << per.skipped << " skipped\n";
        per = {};
    };
    for (const auto& r : reports) {
        if (r.case_id != current) {
            flush_case();
            current = r.case_id;
        }
        switch (r.status) {
            case congruence::Status::verified: ++per.verified; break;
            case congruence::Status::failed: ++per.failed; break;
            case congruence::Status::skipped: ++per.skipped; break;
        }
        os << pad(r.case_id, 17) << pad(r.params.str(), 21) << pad(r.modulus, 33)
           << pad(congruence::status_str(r.status), 9) << std::fixed << std::setprecision(1)
           << r.ms << "\n";
        if (r.status == congruence::Status::skipped && !r.reason.empty())
            os << "    reason: " << r.reason << "\n";
        if (r.status == congruence::Status::failed && !r.witness.empty())
            os << "    witness: " << r.witness << "\n";
        if (verbose)
            for (const auto& s : r.strategy) os << "    . " << s << "\n";
    }
    flush_case();
    auto total = harness::summarize(reports);
    os << "== total: " << total.verified << " verified, " << total.failed << " failed, "
       << total.skipped << " skipped\n";
    return os.str();
}

int exit_code_for(const std::vector<Report>& reports) {
    return harness::summarize(reports).failed > 0 ? 1 : 0;
}

struct RangeFlags {
    std::string n, d, r, s, p, k;
    Overrides to_overrides() const {
        Overrides ov;
        if (!n.empty()) ov.n = parse_range(n);
        if (!d.empty()) ov.d = parse_range(d);
        if (!r.empty()) ov.r = parse_range(r);
        if (!s.empty()) ov.s = parse_range(s);
        if (!p.empty()) ov.p = parse_range(p);
        if (!k.empty()) ov.k = parse_range(k);
        return ov;
    }
};

int run_cases(const std::vector<std::string>& ids, const RangeFlags& ranges,
              const std::string& format, const std::string& out_path, int workers,
              bool verbose) {
    auto reports = harness::run_sweep(ids, ranges.to_overrides(), workers);
    if (format == "json")
        emit(out_path, harness::reports_to_json_text(reports));
    else if (format == "csv")
        emit(out_path, harness::reports_to_csv(reports));
    else
        emit(out_path, table_of(reports, verbose));
    return exit_code_for(reports);
}

int run_identities(const std::string& name, const std::vector<int64_t>& ns,
                   const std::string& out_path) {
    using sums::ClassicalIdentity;
    static const std::vector<std::pair<std::string, ClassicalIdentity>> all = {
        {"q-chu-vandermonde", ClassicalIdentity::q_chu_vandermonde},
        {"q-pfaff-saalschutz", ClassicalIdentity::q_pfaff_saalschutz},
        {"andrews-q-watson", ClassicalIdentity::andrews_q_watson},
        {"q-gauss-terminating", ClassicalIdentity::q_gauss_terminating},
        {"q-binomial-theorem", ClassicalIdentity::q_binomial_theorem},
    };
    std::vector<std::pair<std::string, ClassicalIdentity>> todo;
    if (name == "all") {
        todo = all;
    } else {
        for (const auto& it : all)
            if (it.first == name) todo.push_back(it);
        if (todo.empty()) {
            std::cerr << "unknown identity: " << name << "\n";
            return 2;
        }
    }
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& [label, which] : todo) {
        for (int64_t n : ns) {
            bool ok = sums::classical_identity_check(which, n);
            all_ok = all_ok && ok;
            os << (ok ? "ok   " : "FAIL ") << label << " n=" << n << "\n";
        }
    }
    emit(out_path, os.str());
    return all_ok ? 0 : 1;
}

std::string list_text(bool as_json) {
    if (as_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : harness::registry()) {
            nlohmann::ordered_json j;
            j["id"] = c.id;
            j["title"] = c.title;
            j["provenance"] = c.provenance;
            j["hidden"] = c.hidden;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& c : harness::registry()) {
        os << c.id << (c.hidden ? "  [fixture]" : "") << "\n    " << c.title << "\n    "
           << c.provenance << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for q-congruences, summation identities and supercongruences"};
    app.require_subcommand(1);

    std::string case_list, format = "table", out_path, identity_name = "all";
    RangeFlags ranges;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool verbose = false;

    auto add_common = [&](CLI::App* cmd, bool with_ranges) {
        cmd->add_option("--format", format, "output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", out_path, "write output atomically to this path");
        cmd->add_option("--workers", workers, "worker thread count");
        cmd->add_flag("--verbose", verbose, "print per-factor strategy lines");
        if (with_ranges) {
            cmd->add_option("--n", ranges.n, "n values, e.g. 1..9 or 1,3,5");
            cmd->add_option("--d", ranges.d, "d values");
            cmd->add_option("--r", ranges.r, "r values");
            cmd->add_option("--s", ranges.s, "s values");
            cmd->add_option("--p", ranges.p, "p values");
            cmd->add_option("--k", ranges.k, "k values");
        }
    };

    CLI::App* verify = app.add_subcommand("verify", "verify selected cases");
    verify->add_option("--case", case_list, "comma-separated case ids")->required();
    add_common(verify, true);

    CLI::App* sweep = app.add_subcommand("sweep", "verify all (or selected) cases");
    sweep->add_option("--case", case_list, "comma-separated case ids (default: all non-fixture)");
    add_common(sweep, true);

    CLI::App* identity = app.add_subcommand("identity", "run classical identity suites");
    identity->add_option("--name", identity_name,
                         "identity name (q-chu-vandermonde, q-pfaff-saalschutz, "
                         "andrews-q-watson, q-gauss-terminating, q-binomial-theorem) or 'all'");
    identity->add_option("--n", ranges.n, "n values, e.g. 1..8");
    identity->add_option("--out", out_path, "write output atomically to this path");

    CLI::App* list = app.add_subcommand("list", "print the case registry with provenance");
    list->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    list->add_option("--out", out_path, "write output atomically to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            emit(out_path, list_text(format == "json"));
            return 0;
        }
        if (identity->parsed()) {
            std::vector<int64_t> ns =
                ranges.n.empty() ? std::vector<int64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8}
                                 : parse_range(ranges.n);
            return run_identities(identity_name, ns, out_path);
        }
        std::vector<std::string> ids;
        if (verify->parsed()) {
            ids = split_commas(case_list);
            if (ids.empty()) {
                std::cerr << "verify: --case must name at least one case\n";
                return 2;
            }
        } else {  // sweep
            if (!case_list.empty()) {
                ids = split_commas(case_list);
            } else {
                for (const auto& c : harness::registry())
                    if (!c.hidden) ids.push_back(c.id);
            }
        }
        return run_cases(ids, ranges, format, out_path, workers, verbose);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
