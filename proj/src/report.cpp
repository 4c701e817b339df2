#include "superlie/report.hpp"

#include <algorithm>

namespace superlie {

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

void Report::merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
}

const CheckResult* Report::find(std::string_view id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string format_combo(const SuperSpace& space, const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rat c = v[i];
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (c != 1) s += rat_str(c) + "·";
        s += space.label(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace superlie
