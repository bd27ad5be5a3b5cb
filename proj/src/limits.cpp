#include "tnn/limits.hpp"

#include <cstdlib>
#include <string>

#include "tnn/errors.hpp"

namespace tnn {

std::optional<long> max_cells_override() {
    const char* raw = std::getenv("TNN_MAX_CELLS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v <= 0) return std::nullopt;
    return v;
}

void require_cells_within(int m, int p, long default_limit, std::string_view operation) {
    const long limit = max_cells_override().value_or(default_limit);
    const long cells = static_cast<long>(m) * static_cast<long>(p);
    if (cells > limit) {
        throw CapacityError(std::string(operation) + ": " + std::to_string(m) + "x" + std::to_string(p) +
                            " grid has " + std::to_string(cells) + " cells, limit is " +
                            std::to_string(limit) + " (set TNN_MAX_CELLS to override)");
    }
}

}  // namespace tnn
