#include "qcong/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qcong::harness {

using congruence::Status;

std::string CaseParams::str() const {
    std::string out;
    auto put = [&out](const char* name, const std::optional<int64_t>& v) {
        if (!v) return;
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(*v);
    };
    put("n", n);
    put("d", d);
    put("r", r);
    put("s", s);
    put("p", p);
    put("k", k);
    return out;
}

Summary summarize(const std::vector<Report>& reports) {
    Summary sum;
    for (const auto& r : reports) {
        switch (r.status) {
            case Status::verified: ++sum.verified; break;
            case Status::failed: ++sum.failed; break;
            case Status::skipped: ++sum.skipped; break;
        }
    }
    return sum;
}

const CongruenceCase* find_case(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<Report> run_sweep(const std::vector<std::string>& case_ids, const Overrides& ov,
                              int workers) {
    std::vector<std::pair<const CongruenceCase*, CaseParams>> items;
    for (const auto& id : case_ids) {
        const CongruenceCase* c = find_case(id);
        if (!c) throw std::invalid_argument("unknown case id: " + id);
        for (auto& p : c->domain(ov)) items.emplace_back(c, p);
    }

    std::vector<Report> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            auto t0 = std::chrono::steady_clock::now();
            Report rep;
            try {
                rep = items[i].first->run(items[i].second);
            } catch (const std::exception& e) {
                rep.case_id = items[i].first->id;
                rep.params = items[i].second;
                rep.status = Status::failed;
                rep.witness = std::string("exception: ") + e.what();
            }
            rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
            out[i] = std::move(rep);
        }
    };

    workers = std::max(1, workers);
    if (workers == 1 || items.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::stable_sort(out.begin(), out.end(), [](const Report& l, const Report& r) {
        if (l.case_id != r.case_id) return l.case_id < r.case_id;
        return l.params < r.params;
    });
    return out;
}

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["case"] = r.case_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    auto put = [&params](const char* name, const std::optional<int64_t>& v) {
        if (v) params[name] = *v;
    };
    put("n", r.params.n);
    put("d", r.params.d);
    put("r", r.params.r);
    put("s", r.params.s);
    put("p", r.params.p);
    put("k", r.params.k);
    j["params"] = std::move(params);
    j["modulus"] = r.modulus;
    j["status"] = congruence::status_str(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.witness.empty()) j["witness"] = r.witness;
    j["strategy"] = r.strategy;
    j["ms"] = r.ms;
    return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
    Report r;
    r.case_id = j.at("case").get<std::string>();
    const auto& params = j.at("params");
    auto get = [&params](const char* name) -> std::optional<int64_t> {
        if (!params.contains(name)) return std::nullopt;
        return params.at(name).get<int64_t>();
    };
    r.params.n = get("n");
    r.params.d = get("d");
    r.params.r = get("r");
    r.params.s = get("s");
    r.params.p = get("p");
    r.params.k = get("k");
    r.modulus = j.at("modulus").get<std::string>();
    std::string st = j.at("status").get<std::string>();
    if (st == "verified") r.status = Status::verified;
    else if (st == "failed") r.status = Status::failed;
    else if (st == "skipped") r.status = Status::skipped;
    else throw std::invalid_argument("report_from_json: bad status " + st);
    if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
    if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
    r.strategy = j.at("strategy").get<std::vector<std::string>>();
    r.ms = j.at("ms").get<double>();
    return r;
}

std::string reports_to_json_text(const std::vector<Report>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n;") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "case,n,d,r,s,p,k,modulus,status,reason,witness,strategy,ms\n";
    for (const auto& r : reports) {
        auto opt = [](const std::optional<int64_t>& v) {
            return v ? std::to_string(*v) : std::string();
        };
        std::string strategy;
        for (const auto& s : r.strategy) {
            if (!strategy.empty()) strategy += ';';
            strategy += s;
        }
        os << csv_field(r.case_id) << ',' << opt(r.params.n) << ',' << opt(r.params.d) << ','
           << opt(r.params.r) << ',' << opt(r.params.s) << ',' << opt(r.params.p) << ','
           << opt(r.params.k) << ',' << csv_field(r.modulus) << ','
           << congruence::status_str(r.status) << ',' << csv_field(r.reason) << ','
           << csv_field(r.witness) << ',' << csv_field(strategy) << ',' << r.ms << '\n';
    }
    return os.str();
}

}  // namespace qcong::harness
