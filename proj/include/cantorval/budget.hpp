#ifndef CANTORVAL_BUDGET_HPP
#define CANTORVAL_BUDGET_HPP

#include <cstdint>
#include <string>

#include "cantorval/errors.hpp"

namespace cantorval {

/// Upper bound on the number of intervals an exact enumeration may produce.
struct DepthBudget {
  static constexpr std::uint64_t kDefaultMaxParts = std::uint64_t{1} << 20;

  std::uint64_t max_parts = kDefaultMaxParts;

  /// Throws BudgetExceeded unless base^depth <= max_parts.
  void require(unsigned base, std::size_t depth, const char* what) const {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < depth; ++i) {
      count *= base;
      if (count > max_parts)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(depth) +
                             " parts exceeds budget of " + std::to_string(max_parts));
    }
  }
};

}  // namespace cantorval

#endif  // CANTORVAL_BUDGET_HPP
