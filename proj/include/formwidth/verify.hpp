#pragma once

#include <formwidth/extremal.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace formwidth {

struct CheckResult
{
    std::string id;
    std::string locus;
    std::string parameters;
    std::string expected;
    std::string computed;
    bool pass = false;
    double elapsed_ms = 0;
};

struct VerifyReport
{
    std::vector<CheckResult> checks;

    [[nodiscard]] auto overall() const -> bool;
};

struct VerifyOptions
{
    unsigned threads = 1;
    /// Run only this check id.
    std::optional<std::string> check;
    /// Grid overrides: k, t, r, s, n, j.
    std::map<std::string, int> parameters;
    OracleLimits limits;
};

struct CheckInfo
{
    std::string id;
    std::string locus;
};

/// Every check id with the result it replays, in run order.
[[nodiscard]] auto verify_checks() -> const std::vector<CheckInfo> &;

/// Runs the desk-scale grid. Throws InvalidArgument for an unknown check id.
[[nodiscard]] auto run_verify(const VerifyOptions & options) -> VerifyReport;

} // namespace formwidth
