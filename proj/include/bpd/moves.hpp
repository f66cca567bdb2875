#pragma once

#include <functional>
#include <set>
#include <vector>

#include "bpd/bpd.hpp"

namespace bpd {

struct Rect {
    int top = 0, left = 0, bottom = 0, right = 0;
    auto operator<=>(const Rect&) const = default;
};

struct Move {
    Rect rect;
    Bpd result;
};

// All droops of b: rectangles with a down-elbow at the north-west corner, a
// blank at the south-east corner and no other elbow tiles inside.  Every
// result validates and has the same associated permutation.
std::vector<Move> droops(const Bpd& b);

// Both K-theoretic droop forms.  Results may be non-reduced; the associated
// permutation is preserved because the new crossing is redundant.
std::vector<Move> k_droops(const Bpd& b);

// The four 2x2 local moves for vexillary permutations, both directions.
enum class LocalMoveKind {
    Droop2,      // down-elbow droops into the adjacent blank
    Droop2Inv,
    Kink,        // straight corner trades for an up/down elbow pair
    KinkInv,
    ZigzagDown,  // elbow pair slides one row down
    ZigzagUp,
    JogRight,    // elbow pair slides one column right
    JogLeft,
};
// True for the moves that preserve the total number of up-elbows.
bool is_slide_move(LocalMoveKind k);

std::vector<std::pair<LocalMoveKind, Bpd>> local_moves_tagged(const Bpd& b);
// Errors unless permutation_of(b) is vexillary.
std::vector<Bpd> local_moves(const Bpd& b);

// BFS closure of {rothe(p)} under droops and K-theoretic droops.
std::set<Bpd> enumerate_pipes(const Permutation& p);

// Closure of {start} under the vexillary local moves.
std::set<Bpd> local_move_closure(const Bpd& start);

// Every edge-consistent tiling of the n x n grid, generated by row-by-row
// backtracking over column edge profiles.  Independent of the move machinery.
void for_each_bpd(int n, const std::function<void(const Bpd&)>& fn);

// Exhaustive-tiler oracle for enumerate_pipes; refuses n above the bound.
std::set<Bpd> brute_force_pipes(const Permutation& p, int bound = 5);

// Streams (P, S) for every P in Pipes(p) and every subset S of U(P).
void for_each_marked_bpd(const Permutation& p,
                         const std::function<void(const MarkedBpd&)>& fn);

}  // namespace bpd
