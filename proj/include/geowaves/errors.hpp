#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geowaves {

// A call contract was violated (bad argument, sieve limit too small, a
// non-adjacent face pair in a strip, ...).  The CLI maps this to exit code 2.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured work or memory budget ran out before the result was complete.
// Carries partial progress so the caller can report it.  CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t nodes_visited = 0;
    std::uint64_t partial_count = 0;
    BudgetExceeded(const std::string& what, std::uint64_t nodes, std::uint64_t partial)
        : std::runtime_error(what), nodes_visited(nodes), partial_count(partial) {}
};

}  // namespace geowaves
