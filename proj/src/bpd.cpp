#include "bpd/bpd.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace bpd {

unsigned tile_edges(Tile t) {
    switch (t) {
        case Tile::Blank: return 0;
        case Tile::Cross: return kNorth | kSouth | kEast | kWest;
        case Tile::Vertical: return kNorth | kSouth;
        case Tile::Horizontal: return kEast | kWest;
        case Tile::DownElbow: return kSouth | kEast;
        case Tile::UpElbow: return kWest | kNorth;
        case Tile::Bump: return kNorth | kSouth | kEast | kWest;
    }
    return 0;
}

char tile_char(Tile t) {
    switch (t) {
        case Tile::Blank: return '.';
        case Tile::Cross: return '+';
        case Tile::Vertical: return '|';
        case Tile::Horizontal: return '-';
        case Tile::DownElbow: return 'r';
        case Tile::UpElbow: return 'J';
        case Tile::Bump: return 'b';
    }
    return '?';
}

std::optional<Tile> tile_from_char(char c) {
    switch (c) {
        case '.': return Tile::Blank;
        case '+': return Tile::Cross;
        case '|': return Tile::Vertical;
        case '-': return Tile::Horizontal;
        case 'r': return Tile::DownElbow;
        case 'J': return Tile::UpElbow;
        case 'b': return Tile::Bump;
        default: return std::nullopt;
    }
}

TileGrid TileGrid::filled(int n, Tile t) {
    return TileGrid{n, std::vector<Tile>(static_cast<size_t>(n) * static_cast<size_t>(n), t)};
}

std::string render_ascii(const TileGrid& g) {
    std::string out;
    out.reserve(static_cast<size_t>(g.n) * static_cast<size_t>(g.n + 1));
    for (int r = 1; r <= g.n; ++r) {
        for (int c = 1; c <= g.n; ++c) out += tile_char(g.at(r, c));
        if (r < g.n) out += '\n';
    }
    return out;
}

TileGrid parse_ascii(const std::string& text) {
    std::vector<std::string> rows;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("bpd: empty grid text");
    const int n = static_cast<int>(rows.size());
    TileGrid g = TileGrid::filled(n, Tile::Blank);
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r) - 1].size()) != n)
            throw std::invalid_argument("bpd: grid is not square at row " + std::to_string(r));
        for (int c = 1; c <= n; ++c) {
            const char ch = rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
            const auto t = tile_from_char(ch);
            if (!t)
                throw std::invalid_argument(std::string("bpd: unknown tile character '") + ch +
                                            "' at (" + std::to_string(r) + "," + std::to_string(c) + ")");
            g.at(r, c) = *t;
        }
    }
    return g;
}

namespace {

bool has_edge(const TileGrid& g, int r, int c, unsigned edge) {
    return (tile_edges(g.at(r, c)) & edge) != 0;
}

[[noreturn]] void edge_error(const char* what, int r, int c) {
    std::ostringstream msg;
    msg << "bpd: " << what << " at (" << r << "," << c << ")";
    throw std::invalid_argument(msg.str());
}

// Propagates pipe labels across the grid, bottom row first and left to right
// within each row, so every cell is seen after the cells feeding its south
// and west edges.  Crossings between pairs that have already crossed are
// replaced by bumps on the fly; this is the trace order from the bottom edge
// because pipes only ever head north or east.
struct SweepResult {
    TileGrid resolved;
    std::vector<int> exit_labels;   // [row-1] = label leaving the right edge
    std::vector<int> ups_per_pipe;  // [label-1]
    bool reduced = true;
};

SweepResult sweep(const TileGrid& g) {
    const int n = g.n;
    SweepResult out{g, std::vector<int>(static_cast<size_t>(n), 0),
                    std::vector<int>(static_cast<size_t>(n), 0), true};
    std::vector<int> col_label(static_cast<size_t>(n) + 1, 0);
    for (int c = 1; c <= n; ++c) col_label[static_cast<size_t>(c)] = c;
    std::vector<bool> crossed(static_cast<size_t>(n) * static_cast<size_t>(n), false);
    auto pair_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<size_t>(a - 1) * static_cast<size_t>(n) + static_cast<size_t>(b - 1);
    };

    for (int r = n; r >= 1; --r) {
        int row_label = 0;
        for (int c = 1; c <= n; ++c) {
            const int s_in = col_label[static_cast<size_t>(c)];
            const int w_in = row_label;
            int n_out = 0, e_out = 0;
            switch (g.at(r, c)) {
                case Tile::Blank:
                    break;
                case Tile::Vertical:
                    n_out = s_in;
                    break;
                case Tile::Horizontal:
                    e_out = w_in;
                    break;
                case Tile::DownElbow:
                    e_out = s_in;
                    break;
                case Tile::UpElbow:
                    n_out = w_in;
                    ++out.ups_per_pipe[static_cast<size_t>(w_in) - 1];
                    break;
                case Tile::Cross: {
                    const size_t idx = pair_index(s_in, w_in);
                    if (crossed[idx]) {
                        out.resolved.at(r, c) = Tile::Bump;
                        out.reduced = false;
                        n_out = w_in;
                        e_out = s_in;
                        ++out.ups_per_pipe[static_cast<size_t>(w_in) - 1];
                    } else {
                        crossed[idx] = true;
                        n_out = s_in;
                        e_out = w_in;
                    }
                    break;
                }
                case Tile::Bump:
                    n_out = w_in;
                    e_out = s_in;
                    ++out.ups_per_pipe[static_cast<size_t>(w_in) - 1];
                    break;
            }
            col_label[static_cast<size_t>(c)] = n_out;
            row_label = e_out;
        }
        out.exit_labels[static_cast<size_t>(r) - 1] = row_label;
    }
    return out;
}

}  // namespace

Bpd Bpd::validate(TileGrid grid) {
    const int n = grid.n;
    if (n < 1) throw std::invalid_argument("bpd: grid must be at least 1x1");
    if (grid.tiles.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("bpd: tile array is not n x n");
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (grid.at(r, c) == Tile::Bump)
                edge_error("bump tile not allowed in a raw pipe dream", r, c);
    for (int c = 1; c <= n; ++c)
        if (!has_edge(grid, n, c, kSouth)) edge_error("missing pipe on the south boundary", n, c);
    for (int r = 1; r <= n; ++r)
        if (!has_edge(grid, r, n, kEast)) edge_error("missing pipe on the east boundary", r, n);
    for (int c = 1; c <= n; ++c)
        if (has_edge(grid, 1, c, kNorth)) edge_error("pipe on the north boundary", 1, c);
    for (int r = 1; r <= n; ++r)
        if (has_edge(grid, r, 1, kWest)) edge_error("pipe on the west boundary", r, 1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c < n; ++c)
            if (has_edge(grid, r, c, kEast) != has_edge(grid, r, c + 1, kWest))
                edge_error("east/west edge mismatch", r, c);
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r < n; ++r)
            if (has_edge(grid, r, c, kSouth) != has_edge(grid, r + 1, c, kNorth))
                edge_error("north/south edge mismatch", r, c);
    return Bpd(std::move(grid));
}

Bpd Bpd::rothe(const Permutation& p) {
    const int n = p.size();
    const Permutation inv = p.inverse();
    TileGrid g = TileGrid::filled(n, Tile::Blank);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            const bool vertical = inv(c) < r;    // below the elbow in column c
            const bool horizontal = c > p(r);    // right of the elbow in row r
            if (c == p(r))
                g.at(r, c) = Tile::DownElbow;
            else if (vertical && horizontal)
                g.at(r, c) = Tile::Cross;
            else if (vertical)
                g.at(r, c) = Tile::Vertical;
            else if (horizontal)
                g.at(r, c) = Tile::Horizontal;
        }
    }
    return validate(std::move(g));
}

Bpd Bpd::from_ascii(const std::string& text) { return validate(parse_ascii(text)); }

std::vector<Cell> Bpd::blanks() const {
    std::vector<Cell> out;
    for (int r = 1; r <= size(); ++r)
        for (int c = 1; c <= size(); ++c)
            if (at(r, c) == Tile::Blank) out.push_back({r, c});
    return out;
}

std::vector<Cell> Bpd::up_elbows() const {
    std::vector<Cell> out;
    for (int r = 1; r <= size(); ++r)
        for (int c = 1; c <= size(); ++c)
            if (at(r, c) == Tile::UpElbow) out.push_back({r, c});
    return out;
}

MarkedBpd make_marked_bpd(Bpd pipe_dream, std::set<Cell> marks) {
    for (const Cell& cell : marks)
        if (pipe_dream.at(cell.row, cell.col) != Tile::UpElbow) {
            std::ostringstream msg;
            msg << "marked bpd: (" << cell.row << "," << cell.col << ") is not an up-elbow";
            throw std::invalid_argument(msg.str());
        }
    return {std::move(pipe_dream), std::move(marks)};
}

Permutation permutation_of(const Bpd& b) {
    return Permutation::from_one_line(sweep(b.grid()).exit_labels);
}

bool is_reduced(const Bpd& b) { return sweep(b.grid()).reduced; }

TileGrid resolve_to_bumps(const Bpd& b) { return sweep(b.grid()).resolved; }

std::vector<int> up_elbows_per_pipe(const Bpd& b) { return sweep(b.grid()).ups_per_pipe; }

std::vector<PipeTrace> trace_pipes(const Bpd& b) {
    const int n = b.size();
    const TileGrid grid = resolve_to_bumps(b);
    std::vector<PipeTrace> traces(static_cast<size_t>(n));
    for (int start = 1; start <= n; ++start) {
        PipeTrace& t = traces[static_cast<size_t>(start) - 1];
        int r = n, c = start;
        bool from_south = true;
        while (r >= 1 && c <= n) {
            t.cells.push_back({r, c});
            bool exit_north = false;
            switch (grid.at(r, c)) {
                case Tile::Vertical:
                    exit_north = true;
                    break;
                case Tile::Horizontal:
                    exit_north = false;
                    break;
                case Tile::Cross:
                    exit_north = from_south;
                    break;
                case Tile::DownElbow:
                    assert(from_south);
                    exit_north = false;
                    break;
                case Tile::UpElbow:
                    assert(!from_south);
                    t.up_elbow_cells.push_back({r, c});
                    exit_north = true;
                    break;
                case Tile::Bump:
                    if (from_south) {
                        exit_north = false;
                    } else {
                        t.up_elbow_cells.push_back({r, c});
                        exit_north = true;
                    }
                    break;
                case Tile::Blank:
                    throw std::logic_error("bpd: pipe trace entered a blank tile");
            }
            if (exit_north) {
                --r;
                from_south = true;
            } else {
                ++c;
                from_south = false;
            }
        }
        assert(c > n);  // pipes end at the right edge
    }
    return traces;
}

}  // namespace bpd
