#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// A computation would exceed a configured size or work budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scx
