// Structured pass/fail reports for the machine checks.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qminor {

struct CheckItem {
    std::string instance;
    bool ok = false;
    std::string residual;  // rendering of the nonzero leftover, empty when ok
};

struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;

    bool all_passed() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& it : items)
            if (!it.ok) ++f;
        return f;
    }

    std::string summary() const {
        return name + ": " + std::to_string(items.size() - failures()) + "/" +
               std::to_string(items.size()) + " instances ok";
    }
};

}  // namespace qminor
