#pragma once

#include <compare>

namespace bpd {

// Grid coordinate, 1-indexed, row 1 at the top.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

}  // namespace bpd
