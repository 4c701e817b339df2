// Check results carry the violated tuples and their exact residuals, so a
// failing report pinpoints the identity and the inputs that break it.
#pragma once

#include "superlie/superspace.hpp"

#include <string>
#include <vector>

namespace superlie {

struct Violation {
    std::vector<std::string> where;  // labels of the basis tuple
    std::string residual;            // formatted residual vector, exact
};

struct CheckResult {
    std::string id;
    std::string law;  // the identity being checked, human readable
    std::size_t tuples = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    void count() { ++tuples; }
    void violate(std::vector<std::string> where, std::string residual) {
        violations.push_back({std::move(where), std::move(residual)});
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const;
    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(Report other);
    const CheckResult* find(std::string_view id) const;
};

/// "2·x - 1/2·y" style rendering of a vector in a labelled basis; "0" if zero.
std::string format_combo(const SuperSpace& space, const Vec& v);

}  // namespace superlie
