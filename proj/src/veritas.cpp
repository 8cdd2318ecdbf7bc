#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <stdexcept>

#include "claims_common.hpp"

namespace witt {

const std::vector<ClaimSpec>& all_claims() {
    static const std::vector<ClaimSpec> claims = [] {
        std::vector<ClaimSpec> out;
        register_env_claims(out);
        register_ideal_claims(out);
        register_geom_claims(out);
        std::sort(out.begin(), out.end(),
                  [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });
        std::set<std::string> seen;
        for (const auto& c : out)
            if (!seen.insert(c.id).second)
                throw std::logic_error("duplicate claim id " + c.id);
        return out;
    }();
    return claims;
}

namespace {

ClaimResult run_one(const ClaimSpec& spec, const VerifyConfig& cfg) {
    ClaimResult res;
    res.id = spec.id;
    res.paper_ref = spec.paper_ref;
    if (spec.witt_mode && !cfg.include_witt) {
        res.status = "skipped";
        res.expected = "WITT-mode claim excluded by configuration";
        res.computed = res.expected;
        return res;
    }
    auto t0 = std::chrono::steady_clock::now();
    ClaimContext ctx(cfg);
    try {
        spec.run(ctx);
        res.status = ctx.ok() ? "pass" : "fail";
        res.expected = ctx.expected_summary();
        res.computed = ctx.computed_summary();
        res.detail = ctx.detail();
        if (ctx.truncated())
            res.detail += "note: degree bounds truncated to " +
                          std::to_string(cfg.max_degree) + " by configuration\n";
    } catch (const std::exception& e) {
        res.status = "error";
        res.expected = "no exception";
        res.computed = e.what();
        res.detail = ctx.detail() + "exception: " + e.what() + "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    res.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return res;
}

} // namespace

ClaimResult run_claim(const std::string& id, const VerifyConfig& cfg) {
    for (const auto& spec : all_claims())
        if (spec.id == id) return run_one(spec, cfg);
    throw DomainError("run_claim: unknown claim id " + id);
}

std::vector<ClaimResult> run_all(const VerifyConfig& cfg) {
    std::vector<ClaimResult> out;
    for (const auto& spec : all_claims()) {
        if (!cfg.only.empty() &&
            std::find(cfg.only.begin(), cfg.only.end(), spec.id) == cfg.only.end())
            continue;
        out.push_back(run_one(spec, cfg));
    }
    if (!cfg.only.empty() && out.size() != cfg.only.size())
        for (const auto& id : cfg.only) {
            bool found = false;
            for (const auto& r : out) found = found || r.id == id;
            if (!found) throw DomainError("run_all: unknown claim id " + id);
        }
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["tool_version"] = tool_version();
    j["config"] = {{"max_degree", config.max_degree},
                   {"include_witt", config.include_witt},
                   {"only", config.only}};
    j["claims"] = nlohmann::json::array();
    for (const auto& c : claims)
        j["claims"].push_back({{"id", c.id},
                               {"paper_ref", c.paper_ref},
                               {"status", c.status},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"detail", c.detail},
                               {"elapsed_ms", c.elapsed_ms}});
    j["all_pass"] = all_pass();
    return j;
}

std::string Report::render_table() const {
    size_t idw = 4;
    for (const auto& c : claims) idw = std::max(idw, c.id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(idw) + 2) << "id" << std::setw(9) << "status"
       << std::setw(9) << "ms"
       << "summary\n";
    for (const auto& c : claims) {
        std::string summary = c.status == "pass" ? c.computed : c.expected + " vs " + c.computed;
        os << std::left << std::setw(static_cast<int>(idw) + 2) << c.id << std::setw(9) << c.status
           << std::setw(9) << c.elapsed_ms << summary << "\n";
    }
    size_t pass = 0, fail = 0, skip = 0, err = 0;
    for (const auto& c : claims) {
        if (c.status == "pass") ++pass;
        else if (c.status == "fail") ++fail;
        else if (c.status == "skipped") ++skip;
        else ++err;
    }
    os << claims.size() << " claims: " << pass << " passed, " << fail << " failed, " << skip
       << " skipped, " << err << " errored\n";
    return os.str();
}

Report make_report(const VerifyConfig& cfg) {
    Report r;
    r.config = cfg;
    r.claims = run_all(cfg);
    return r;
}

} // namespace witt
