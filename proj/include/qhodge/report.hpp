#pragma once

#include <string>
#include <vector>

namespace qhodge {

struct Check {
    std::string name;
    bool passed = false;
    std::string witness;  // empty on success
};

/// Itemized pass/fail record shared by validation reports and certificates.
struct Certificate {
    std::vector<Check> items;

    void add(const std::string& name, bool ok, const std::string& witness = "") {
        items.push_back({name, ok, ok ? "" : witness});
    }
    bool passed() const {
        for (const auto& c : items)
            if (!c.passed) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const auto& c : items)
            if (!c.passed) return &c;
        return nullptr;
    }
};

using ValidationReport = Certificate;

}  // namespace qhodge
