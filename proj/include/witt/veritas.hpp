#ifndef WITT_VERITAS_HPP
#define WITT_VERITAS_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace witt {

inline const char* tool_version() { return "1.0.0"; }

struct VerifyConfig {
    int max_degree = 0;             // 0 = per-claim defaults
    bool include_witt = true;       // run WITT-mode claims
    std::vector<std::string> only;  // restrict to these ids (empty = all)
};

/// Collects the individual checks a claim performs.
class ClaimContext {
public:
    explicit ClaimContext(const VerifyConfig& cfg) : cfg_(cfg) {}

    const VerifyConfig& config() const { return cfg_; }

    /// Degree cutoff: the claim's default, possibly lowered by the config.
    int cutoff(int claim_default) const {
        if (cfg_.max_degree > 0 && cfg_.max_degree < claim_default) {
            truncated_ = true;
            return cfg_.max_degree;
        }
        return claim_default;
    }

    void require(bool cond, const std::string& name, const std::string& expected,
                 const std::string& computed) {
        ++checks_;
        if (cond) {
            if (key_expected_.empty()) {
                key_expected_ = expected;
                key_computed_ = computed;
            }
        } else {
            if (ok_) {
                fail_expected_ = expected;
                fail_computed_ = computed;
                fail_name_ = name;
            }
            ok_ = false;
        }
        detail_ << name << ": expected " << expected << ", got " << computed
                << (cond ? "" : "  <-- MISMATCH") << "\n";
    }

    template <typename T>
    void require_eq(const std::string& name, const T& expected, const T& computed) {
        std::ostringstream e, c;
        e << expected;
        c << computed;
        require(expected == computed, name, e.str(), c.str());
    }

    bool ok() const { return ok_; }
    bool truncated() const { return truncated_; }
    size_t checks() const { return checks_; }
    std::string expected_summary() const {
        if (!ok_) return fail_name_ + ": " + fail_expected_;
        return std::to_string(checks_) + " checks; e.g. " + key_expected_;
    }
    std::string computed_summary() const {
        if (!ok_) return fail_name_ + ": " + fail_computed_;
        return std::to_string(checks_) + " checks; e.g. " + key_computed_;
    }
    std::string detail() const { return detail_.str(); }

private:
    const VerifyConfig& cfg_;
    bool ok_ = true;
    mutable bool truncated_ = false;
    size_t checks_ = 0;
    std::string key_expected_, key_computed_;
    std::string fail_name_, fail_expected_, fail_computed_;
    std::ostringstream detail_;
};

struct ClaimSpec {
    std::string id;
    std::string paper_ref; // citation with the quoted expected statement
    bool witt_mode = false;
    std::function<void(ClaimContext&)> run;
};

struct ClaimResult {
    std::string id;
    std::string paper_ref;
    std::string status; // pass | fail | skipped | error
    std::string expected;
    std::string computed;
    std::string detail;
    long elapsed_ms = 0;
};

/// The full claim list, ordered by id.  Defined across the claims_*.cpp files.
const std::vector<ClaimSpec>& all_claims();

ClaimResult run_claim(const std::string& id, const VerifyConfig& cfg = {});
std::vector<ClaimResult> run_all(const VerifyConfig& cfg = {});

struct Report {
    VerifyConfig config;
    std::vector<ClaimResult> claims;

    bool all_pass() const {
        for (const auto& c : claims)
            if (c.status == "fail" || c.status == "error") return false;
        return true;
    }
    nlohmann::json to_json() const;
    std::string render_table() const;
};

Report make_report(const VerifyConfig& cfg = {});

} // namespace witt

#endif
