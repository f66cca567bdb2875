#pragma once

#include <map>
#include <set>
#include <vector>

#include "bpd/cell.hpp"
#include "bpd/permutation.hpp"

namespace bpd {

// Young diagram with a positive-or-zero integer label in every cell.
struct FilledShape {
    std::vector<int> rows;     // weakly decreasing row lengths
    std::map<Cell, int> fill;  // every cell of the diagram is labelled

    std::set<Cell> cells() const;
    int max_label() const;
};

// Sum of the Rajchgot code; the Grothendieck degree for every permutation.
int psw_degree(const Permutation& p);

// r(i,j) = #{k < i : w(k) < j} on each blank of the Rothe pipe dream; the
// number of pipes passing north-west of the blank.  Vexillary input only.
std::map<Cell, int> rothe_labels(const Permutation& p);

// lambda(w): the Young diagram with the same number of cells on each
// north-west diagonal (constant col - row) as the Rothe blank set, labels
// transported diagonal by diagonal in north-west to south-east order.
// Vexillary input only.
FilledShape lambda_filled(const Permutation& p);

// Cells labelled >= k.
std::set<Cell> tau(const FilledShape& shape, int k);

// Length of the longest antidiagonal path: rows strictly decreasing,
// columns strictly increasing.
int rho_a(const std::set<Cell>& cells);

// length(p) + sum over k of rho_a(tau_k); vexillary input only.
int rrw_degree(const Permutation& p);

struct BridgeRow {
    int lhs = 0;  // sum of r - c over pipes of rank k
    int rhs = 0;  // rho_a(tau_k)
};
// Per-rank comparison of the two degree formulas; vexillary input only.
std::map<int, BridgeRow> corollary_bridge(const Permutation& p, RankBy by);

}  // namespace bpd
