#pragma once

// Check records and the verification report: human text on stdout, JSON to a
// file.  Records are assembled in execution order and emitted sorted by id.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace picmod {

struct CheckRecord {
    std::string id;
    std::string citation;  // plain statement of the claim being checked
    std::string expected;
    std::string actual;
    enum class Status { Pass, Fail, Skipped } status = Status::Fail;
    double elapsed = 0;

    static const char* status_name(Status s) {
        switch (s) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            default: return "skipped";
        }
    }
};

struct RunConfig {
    std::set<std::string> suites;  // subset of exact/group/variety/boundary/theta
    std::string report_path;
    std::string cache_path;
    std::uint64_t seed = 1;
    int theta_radius = 8;
    double tolerance = 1e-8;
    bool slow = false;

    static const std::set<std::string>& known_suites() {
        static const std::set<std::string> s = {"exact", "group", "variety", "boundary",
                                                "theta"};
        return s;
    }

    void resolve_suites(const std::vector<std::string>& requested) {
        suites.clear();
        for (const auto& name : requested) {
            if (name == "all") {
                suites = known_suites();
                continue;
            }
            if (!known_suites().count(name))
                throw std::invalid_argument("unknown suite: " + name);
            suites.insert(name);
        }
        if (suites.empty()) throw std::invalid_argument("empty suite selection");
    }
};

struct Report {
    std::string version = "1.0";
    RunConfig config;
    std::string group_source;  // "generated" or "cache"
    double group_seconds = 0;
    std::vector<CheckRecord> records;

    bool all_passed() const {
        for (const auto& r : records)
            if (r.status == CheckRecord::Status::Fail) return false;
        return true;
    }

    void sort_records() {
        std::sort(records.begin(), records.end(),
                  [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["version"] = version;
        j["seed"] = config.seed;
        j["config"] = {{"suites", std::vector<std::string>(config.suites.begin(),
                                                           config.suites.end())},
                       {"theta_radius", config.theta_radius},
                       {"tolerance", config.tolerance},
                       {"slow", config.slow},
                       {"cache", config.cache_path},
                       {"group_source", group_source},
                       {"group_seconds", group_seconds}};
        j["checks"] = nlohmann::json::array();
        for (const auto& r : records)
            j["checks"].push_back({{"checkId", r.id},
                                   {"citation", r.citation},
                                   {"expected", r.expected},
                                   {"actual", r.actual},
                                   {"status", CheckRecord::status_name(r.status)},
                                   {"elapsed", r.elapsed}});
        return j;
    }

    void print_text(std::ostream& os) const {
        std::size_t pass = 0, fail = 0, skip = 0;
        for (const auto& r : records) {
            const char* tag = CheckRecord::status_name(r.status);
            os << (r.status == CheckRecord::Status::Fail ? "FAIL" : tag) << "  " << r.id;
            if (r.status == CheckRecord::Status::Fail)
                os << "  expected " << r.expected << ", got " << r.actual;
            os << "  (" << r.elapsed << " s)\n";
            if (r.status == CheckRecord::Status::Pass) ++pass;
            else if (r.status == CheckRecord::Status::Fail) ++fail;
            else ++skip;
        }
        os << pass << " passed, " << fail << " failed, " << skip << " skipped; group "
           << group_source << " in " << group_seconds << " s\n";
    }
};

}  // namespace picmod
