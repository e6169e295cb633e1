#pragma once

#include <string>
#include <vector>

namespace loopqkz {

/// Outcome of one named identity check. `witness` describes the first failure.
struct CheckResult {
    std::string identity;
    bool ok = true;
    std::string witness;
};

class Report {
public:
    void add(std::string identity, bool ok, std::string witness = {})
    {
        results_.push_back({std::move(identity), ok, ok ? std::string() : std::move(witness)});
    }
    void merge(const Report& other)
    {
        results_.insert(results_.end(), other.results_.begin(), other.results_.end());
    }

    bool ok() const
    {
        for (const auto& r : results_)
            if (!r.ok) return false;
        return true;
    }
    const std::vector<CheckResult>& results() const noexcept { return results_; }

    /// First failing result, or nullptr.
    const CheckResult* first_failure() const
    {
        for (const auto& r : results_)
            if (!r.ok) return &r;
        return nullptr;
    }

private:
    std::vector<CheckResult> results_;
};

}  // namespace loopqkz
