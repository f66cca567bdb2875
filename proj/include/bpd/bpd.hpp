#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bpd/cell.hpp"
#include "bpd/permutation.hpp"

namespace bpd {

// The six tile kinds plus the bump tile used when resolving redundant
// crossings.  A down-elbow joins the south and east edges, an up-elbow the
// west and north edges; a bump carries both pairs as disjoint segments.
enum class Tile : std::uint8_t {
    Blank,
    Cross,
    Vertical,
    Horizontal,
    DownElbow,
    UpElbow,
    Bump,
};

enum Edge : unsigned { kNorth = 1, kSouth = 2, kEast = 4, kWest = 8 };

// Bitmask of edges carrying a pipe, fixed per kind.
unsigned tile_edges(Tile t);

char tile_char(Tile t);
std::optional<Tile> tile_from_char(char c);

// Raw square tile array.  May contain bump tiles; a validated Bpd never does.
struct TileGrid {
    int n = 0;
    std::vector<Tile> tiles;

    static TileGrid filled(int n, Tile t);
    Tile at(int row, int col) const {
        return tiles[static_cast<size_t>(row - 1) * static_cast<size_t>(n) +
                     static_cast<size_t>(col - 1)];
    }
    Tile& at(int row, int col) {
        return tiles[static_cast<size_t>(row - 1) * static_cast<size_t>(n) +
                     static_cast<size_t>(col - 1)];
    }
    auto operator<=>(const TileGrid&) const = default;
};

// One character per cell, rows separated by newlines:
// '.' blank, '+' cross, '|' vertical, '-' horizontal, 'r' down-elbow,
// 'J' up-elbow, 'b' bump.
std::string render_ascii(const TileGrid& g);
TileGrid parse_ascii(const std::string& text);

// A validated bumpless pipe dream: edge-consistent, correct boundary, no
// bump tiles.  These conditions force n pipes running bottom edge to right
// edge.  Immutable.
class Bpd {
public:
    // Throws std::invalid_argument naming the first violated edge.
    static Bpd validate(TileGrid grid);
    // Down-elbows at (i, w(i)), verticals below, horizontals to the right,
    // crosses where those meet.  No up-elbows; blanks form the Rothe diagram.
    static Bpd rothe(const Permutation& p);
    static Bpd from_ascii(const std::string& text);

    int size() const { return grid_.n; }
    Tile at(int row, int col) const { return grid_.at(row, col); }
    const TileGrid& grid() const { return grid_; }

    std::vector<Cell> blanks() const;     // D(P), row-major order
    std::vector<Cell> up_elbows() const;  // U(P), row-major order
    std::string ascii() const { return render_ascii(grid_); }

    auto operator<=>(const Bpd&) const = default;

private:
    explicit Bpd(TileGrid g) : grid_(std::move(g)) {}
    TileGrid grid_;
};

// A pipe dream with a chosen subset of its up-elbow cells.
struct MarkedBpd {
    Bpd pipe_dream;
    std::set<Cell> marks;
};

// Checks marks against U(P); throws on a mark that is not an up-elbow.
MarkedBpd make_marked_bpd(Bpd pipe_dream, std::set<Cell> marks);

// Pipes are labelled 1..n at the bottom edge by column; w(i) is the label
// exiting the right edge in row i, read after bump resolution.
Permutation permutation_of(const Bpd& b);
// True when no pair of pipes crosses more than once.
bool is_reduced(const Bpd& b);
// Replaces every crossing after the first between each pair of pipes (in
// trace order from the bottom edge) with a bump tile.
TileGrid resolve_to_bumps(const Bpd& b);

// Per-pipe data computed on the bump-resolved grid.
struct PipeTrace {
    std::vector<Cell> cells;                 // visited cells in trace order
    std::vector<Cell> up_elbow_cells;        // up-elbows traversed, includes
                                             // the west-north leg of bumps
};
std::vector<PipeTrace> trace_pipes(const Bpd& b);  // index 0 = pipe 1

// up_elbows_per_pipe[label-1] counts up-elbows of that pipe on the resolved
// grid; a bump contributes one to the pipe on its west-north leg.
std::vector<int> up_elbows_per_pipe(const Bpd& b);

}  // namespace bpd
