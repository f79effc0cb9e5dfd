#pragma once

#include <stdexcept>
#include <string>

namespace d43 {

// Closure/BFS exceeded its vertex or path cap.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element satisfied zero or several of the (F)/(E) condition blocks.
struct PartitionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// base - mu is not an integer combination of the simple roots.
struct NotInRootLattice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace d43
