#pragma once

#include <optional>
#include <string>
#include <vector>

namespace knutson {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool pass() const;
};

/// Suites: orthogonality, sequences, sl2-rho, knutson-small, cores.
/// q restricts sl2-rho to a single odd q >= 5.
SuiteReport run_suite(const std::string& name, std::optional<int> q = std::nullopt);

const std::vector<std::string>& suite_names();

} // namespace knutson
