#include "bpd/moves.hpp"

#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace bpd {

namespace {

bool is_elbow(Tile t) { return t == Tile::DownElbow || t == Tile::UpElbow; }

// Elbow count of any closed rectangle in O(1), prefix sums built per grid.
struct ElbowCounts {
    int n;
    std::vector<int> prefix;  // (n+1) x (n+1)

    explicit ElbowCounts(const TileGrid& g)
        : n(g.n), prefix(static_cast<size_t>((n + 1) * (n + 1)), 0) {
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c)
                at(r, c) = at(r - 1, c) + at(r, c - 1) - at(r - 1, c - 1) +
                           (is_elbow(g.at(r, c)) ? 1 : 0);
    }
    int& at(int r, int c) {
        return prefix[static_cast<size_t>(r) * static_cast<size_t>(n + 1) + static_cast<size_t>(c)];
    }
    int get(int r, int c) const {
        return prefix[static_cast<size_t>(r) * static_cast<size_t>(n + 1) + static_cast<size_t>(c)];
    }
    int in_rect(int r1, int c1, int r2, int c2) const {
        return get(r2, c2) - get(r1 - 1, c2) - get(r2, c1 - 1) + get(r1 - 1, c1 - 1);
    }
};

// Strand-level rewrites.  Each returns the new tile, or nullopt when the
// cell does not carry the expected strands.
std::optional<Tile> remove_vertical(Tile t) {
    if (t == Tile::Vertical) return Tile::Blank;
    if (t == Tile::Cross) return Tile::Horizontal;
    return std::nullopt;
}
std::optional<Tile> remove_horizontal(Tile t) {
    if (t == Tile::Horizontal) return Tile::Blank;
    if (t == Tile::Cross) return Tile::Vertical;
    return std::nullopt;
}
std::optional<Tile> add_vertical(Tile t) {
    if (t == Tile::Blank) return Tile::Vertical;
    if (t == Tile::Horizontal) return Tile::Cross;
    return std::nullopt;
}
std::optional<Tile> add_horizontal(Tile t) {
    if (t == Tile::Blank) return Tile::Horizontal;
    if (t == Tile::Vertical) return Tile::Cross;
    return std::nullopt;
}

bool rewrite(TileGrid& g, int r, int c, std::optional<Tile> (*fn)(Tile)) {
    const auto t = fn(g.at(r, c));
    if (!t) return false;
    g.at(r, c) = *t;
    return true;
}

bool carries_horizontal(Tile t) { return t == Tile::Horizontal || t == Tile::Cross; }
bool carries_vertical(Tile t) { return t == Tile::Vertical || t == Tile::Cross; }

// Detaches the elbow at (r1,c1) and reroutes its pipe along the bottom row
// and right column of the rectangle.  Handles every cell except the
// south-east corner, which differs between the droop and the K-forms.
bool reroute_around(TileGrid& g, int r1, int c1, int r2, int c2) {
    g.at(r1, c1) = Tile::Blank;
    for (int r = r1 + 1; r < r2; ++r)
        if (!rewrite(g, r, c1, remove_vertical)) return false;
    if (g.at(r2, c1) != Tile::Vertical) return false;
    g.at(r2, c1) = Tile::DownElbow;
    for (int c = c1 + 1; c < c2; ++c)
        if (!rewrite(g, r1, c, remove_horizontal)) return false;
    if (g.at(r1, c2) != Tile::Horizontal) return false;
    g.at(r1, c2) = Tile::DownElbow;
    for (int r = r1 + 1; r < r2; ++r)
        if (!rewrite(g, r, c2, add_vertical)) return false;
    for (int c = c1 + 1; c < c2; ++c)
        if (!rewrite(g, r2, c, add_horizontal)) return false;
    return true;
}

std::optional<Bpd> apply_droop(const Bpd& b, int r1, int c1, int r2, int c2) {
    TileGrid g = b.grid();
    if (!reroute_around(g, r1, c1, r2, c2)) return std::nullopt;
    g.at(r2, c2) = Tile::UpElbow;
    return Bpd::validate(std::move(g));
}

// First pictured K-form.  The pipe droops onto the up-elbow at (r2,c2); the
// pipe that fed that elbow from its down-elbow at (r2,cb) straightens up
// column cb and takes over the top row east of cb, crossing the dropped
// pipe a second time at (r1,c2).
std::optional<Bpd> apply_k_droop_onto_up(const Bpd& b, int r1, int c1, int r2, int c2, int cb) {
    for (int c = cb + 1; c < c2; ++c)
        if (!carries_horizontal(b.at(r1, c)) || !carries_horizontal(b.at(r2, c)))
            return std::nullopt;
    if (b.at(r1, c2) != Tile::Cross) return std::nullopt;
    for (int r = r1 + 1; r < r2; ++r)
        if (!carries_vertical(b.at(r, c2))) return std::nullopt;

    TileGrid g = b.grid();
    g.at(r1, c1) = Tile::Blank;
    for (int r = r1 + 1; r < r2; ++r)
        if (!rewrite(g, r, c1, remove_vertical)) return std::nullopt;
    if (g.at(r2, c1) != Tile::Vertical) return std::nullopt;
    g.at(r2, c1) = Tile::DownElbow;
    for (int c = c1 + 1; c < cb; ++c)
        if (!rewrite(g, r1, c, remove_horizontal)) return std::nullopt;
    if (g.at(r1, cb) != Tile::Horizontal) return std::nullopt;
    g.at(r1, cb) = Tile::DownElbow;
    for (int r = r1 + 1; r < r2; ++r)
        if (!rewrite(g, r, cb, add_vertical)) return std::nullopt;
    if (g.at(r2, cb) != Tile::DownElbow) return std::nullopt;
    g.at(r2, cb) = Tile::Cross;
    for (int c = c1 + 1; c < cb; ++c)
        if (!rewrite(g, r2, c, add_horizontal)) return std::nullopt;
    return Bpd::validate(std::move(g));
}

// Second pictured K-form.  The south-east corner holds another pipe's
// down-elbow, fed by the up-elbow directly beneath the rectangle; that pipe
// straightens upward while the dropped pipe crosses it at the corner.
std::optional<Bpd> apply_k_droop_through_down(const Bpd& b, int r1, int c1, int r2, int c2) {
    TileGrid g = b.grid();
    if (!reroute_around(g, r1, c1, r2, c2)) return std::nullopt;
    if (g.at(r2, c2) != Tile::DownElbow) return std::nullopt;
    g.at(r2, c2) = Tile::Cross;
    return Bpd::validate(std::move(g));
}

void assert_preserves(const Permutation& before, const Bpd& after, const char* what) {
    if (permutation_of(after) != before)
        throw std::logic_error(std::string(what) + " changed the associated permutation");
}

}  // namespace

std::vector<Move> droops(const Bpd& b) {
    const int n = b.size();
    const ElbowCounts elbows(b.grid());
    const Permutation perm = permutation_of(b);
    std::vector<Move> out;
    for (int r1 = 1; r1 < n; ++r1)
        for (int c1 = 1; c1 < n; ++c1) {
            if (b.at(r1, c1) != Tile::DownElbow) continue;
            for (int r2 = r1 + 1; r2 <= n; ++r2)
                for (int c2 = c1 + 1; c2 <= n; ++c2) {
                    if (b.at(r2, c2) != Tile::Blank) continue;
                    if (elbows.in_rect(r1, c1, r2, c2) != 1) continue;
                    auto result = apply_droop(b, r1, c1, r2, c2);
                    if (!result) continue;
                    assert_preserves(perm, *result, "droop");
                    out.push_back({Rect{r1, c1, r2, c2}, std::move(*result)});
                }
        }
    return out;
}

std::vector<Move> k_droops(const Bpd& b) {
    const int n = b.size();
    const ElbowCounts elbows(b.grid());
    const Permutation perm = permutation_of(b);
    std::vector<Move> out;
    // A candidate is kept only if the rewrite leaves the associated
    // permutation fixed; the second K-form needs an earlier crossing between
    // the two pipes somewhere south-west, which only the ambient grid knows.
    auto keep = [&](std::optional<Bpd> result, int r1, int c1, int r2, int c2) {
        if (!result) return;
        if (permutation_of(*result) != perm) return;
        out.push_back({Rect{r1, c1, r2, c2}, std::move(*result)});
    };
    for (int r1 = 1; r1 < n; ++r1)
        for (int c1 = 1; c1 < n; ++c1) {
            if (b.at(r1, c1) != Tile::DownElbow) continue;
            for (int r2 = r1 + 1; r2 <= n; ++r2)
                for (int c2 = c1 + 1; c2 <= n; ++c2) {
                    if (b.at(r2, c2) == Tile::UpElbow &&
                        elbows.in_rect(r1, c1, r2, c2) == 3 &&
                        elbows.in_rect(r1, c1, r2 - 1, c2) == 1) {
                        int cb = 0;
                        for (int c = c1 + 1; c < c2; ++c)
                            if (is_elbow(b.at(r2, c))) cb = (cb == 0) ? c : -1;
                        if (cb > 0 && b.at(r2, cb) == Tile::DownElbow)
                            keep(apply_k_droop_onto_up(b, r1, c1, r2, c2, cb), r1, c1, r2, c2);
                    }
                    if (b.at(r2, c2) == Tile::DownElbow && r2 < n &&
                        b.at(r2 + 1, c2) == Tile::UpElbow &&
                        elbows.in_rect(r1, c1, r2, c2) == 2) {
                        keep(apply_k_droop_through_down(b, r1, c1, r2, c2), r1, c1, r2, c2);
                    }
                }
        }
    return out;
}

bool is_slide_move(LocalMoveKind k) {
    return k == LocalMoveKind::ZigzagDown || k == LocalMoveKind::ZigzagUp ||
           k == LocalMoveKind::JogRight || k == LocalMoveKind::JogLeft;
}

namespace {

struct BlockPattern {
    LocalMoveKind kind;
    // Tiles at (r,c), (r,c+1), (r+1,c), (r+1,c+1).
    std::array<Tile, 4> lhs;
    std::array<Tile, 4> rhs;
};

constexpr Tile B = Tile::Blank, V = Tile::Vertical, H = Tile::Horizontal,
               D = Tile::DownElbow, U = Tile::UpElbow;

constexpr BlockPattern kBlockPatterns[] = {
    {LocalMoveKind::Droop2, {D, H, V, B}, {B, D, D, U}},
    {LocalMoveKind::Droop2Inv, {B, D, D, U}, {D, H, V, B}},
    {LocalMoveKind::Kink, {B, V, H, U}, {D, U, U, B}},
    {LocalMoveKind::KinkInv, {D, U, U, B}, {B, V, H, U}},
    {LocalMoveKind::ZigzagDown, {D, U, V, B}, {B, V, D, U}},
    {LocalMoveKind::ZigzagUp, {B, V, D, U}, {D, U, V, B}},
    {LocalMoveKind::JogRight, {D, H, U, B}, {B, D, H, U}},
    {LocalMoveKind::JogLeft, {B, D, H, U}, {D, H, U, B}},
};

}  // namespace

std::vector<std::pair<LocalMoveKind, Bpd>> local_moves_tagged(const Bpd& b) {
    const int n = b.size();
    const Permutation perm = permutation_of(b);
    std::vector<std::pair<LocalMoveKind, Bpd>> out;
    for (int r = 1; r < n; ++r)
        for (int c = 1; c < n; ++c)
            for (const auto& pat : kBlockPatterns) {
                if (b.at(r, c) != pat.lhs[0] || b.at(r, c + 1) != pat.lhs[1] ||
                    b.at(r + 1, c) != pat.lhs[2] || b.at(r + 1, c + 1) != pat.lhs[3])
                    continue;
                TileGrid g = b.grid();
                g.at(r, c) = pat.rhs[0];
                g.at(r, c + 1) = pat.rhs[1];
                g.at(r + 1, c) = pat.rhs[2];
                g.at(r + 1, c + 1) = pat.rhs[3];
                Bpd result = Bpd::validate(std::move(g));
                assert_preserves(perm, result, "local move");
                out.emplace_back(pat.kind, std::move(result));
            }
    return out;
}

std::vector<Bpd> local_moves(const Bpd& b) {
    if (!is_vexillary(permutation_of(b)))
        throw std::invalid_argument("local_moves: permutation is not vexillary");
    std::vector<Bpd> out;
    for (auto& [kind, result] : local_moves_tagged(b)) out.push_back(std::move(result));
    return out;
}

namespace {

template <typename Expand>
std::set<Bpd> bfs_closure(const Bpd& start, Expand&& expand) {
    std::set<Bpd> seen{start};
    std::unordered_set<std::string> visited{start.ascii()};
    std::deque<Bpd> queue{start};
    while (!queue.empty()) {
        const Bpd cur = std::move(queue.front());
        queue.pop_front();
        for (Bpd& next : expand(cur)) {
            if (!visited.insert(next.ascii()).second) continue;
            seen.insert(next);
            queue.push_back(std::move(next));
        }
    }
    return seen;
}

}  // namespace

std::set<Bpd> enumerate_pipes(const Permutation& p) {
    return bfs_closure(Bpd::rothe(p), [](const Bpd& cur) {
        std::vector<Bpd> next;
        for (auto& m : droops(cur)) next.push_back(std::move(m.result));
        for (auto& m : k_droops(cur)) next.push_back(std::move(m.result));
        return next;
    });
}

std::set<Bpd> local_move_closure(const Bpd& start) {
    return bfs_closure(start, [](const Bpd& cur) {
        std::vector<Bpd> next;
        for (auto& [kind, result] : local_moves_tagged(cur)) next.push_back(std::move(result));
        return next;
    });
}

void for_each_bpd(int n, const std::function<void(const Bpd&)>& fn) {
    // Row-major scan carrying the pipe occupancy of the boundary between the
    // placed region and the rest as an n-bit column profile.  Given the north
    // and west edges of a cell the tile is forced except at (0,0), blank or
    // down-elbow, and at (1,1), cross or up-elbow.
    TileGrid g = TileGrid::filled(n, Tile::Blank);
    std::vector<bool> north(static_cast<size_t>(n) + 1, false);

    std::function<void(int, int, bool)> place = [&](int r, int c, bool west) {
        if (c > n) {
            if (r == n)
                fn(Bpd::validate(g));
            else
                place(r + 1, 1, false);
            return;
        }
        const bool n_in = north[static_cast<size_t>(c)];
        auto try_tile = [&](Tile t) {
            const unsigned edges = tile_edges(t);
            const bool east = (edges & kEast) != 0;
            if (c == n && !east) return;                    // east boundary
            const bool south = (edges & kSouth) != 0;
            if (r == n && !south) return;                   // south boundary
            g.at(r, c) = t;
            north[static_cast<size_t>(c)] = south;
            place(r, c + 1, east);
            north[static_cast<size_t>(c)] = n_in;
        };
        if (!n_in && !west) {
            try_tile(Tile::Blank);
            try_tile(Tile::DownElbow);
        } else if (n_in && west) {
            try_tile(Tile::Cross);
            try_tile(Tile::UpElbow);
        } else if (n_in) {
            try_tile(Tile::Vertical);
        } else {
            try_tile(Tile::Horizontal);
        }
    };
    place(1, 1, false);
}

std::set<Bpd> brute_force_pipes(const Permutation& p, int bound) {
    if (p.size() > bound)
        throw std::invalid_argument("brute_force_pipes: n=" + std::to_string(p.size()) +
                                    " exceeds the oracle bound " + std::to_string(bound));
    std::set<Bpd> out;
    for_each_bpd(p.size(), [&](const Bpd& b) {
        if (permutation_of(b) == p) out.insert(b);
    });
    return out;
}

void for_each_marked_bpd(const Permutation& p,
                         const std::function<void(const MarkedBpd&)>& fn) {
    for (const Bpd& b : enumerate_pipes(p)) {
        const std::vector<Cell> ups = b.up_elbows();
        const size_t count = ups.size();
        for (size_t mask = 0; mask < (size_t{1} << count); ++mask) {
            std::set<Cell> marks;
            for (size_t i = 0; i < count; ++i)
                if (mask & (size_t{1} << i)) marks.insert(ups[i]);
            fn(make_marked_bpd(b, std::move(marks)));
        }
    }
}

}  // namespace bpd
