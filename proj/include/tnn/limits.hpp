#pragma once

#include <optional>
#include <string_view>

namespace tnn {

/// Default guards on m*p for the exhaustive sweeps.
inline constexpr long kMaxEnumerationCells = 30;
inline constexpr long kMaxLacunarySearchCells = 25;
inline constexpr long kMaxOracleCells = 64;

/// Value of TNN_MAX_CELLS when set to a positive integer; it replaces every
/// default guard above.
std::optional<long> max_cells_override();

/// Throws CapacityError when m*p exceeds the effective limit.
void require_cells_within(int m, int p, long default_limit, std::string_view operation);

}  // namespace tnn
