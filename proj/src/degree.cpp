#include "bpd/degree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bpd/bpd.hpp"

namespace bpd {

namespace {

void require_vexillary(const Permutation& p, const char* what) {
    if (!is_vexillary(p))
        throw std::invalid_argument(std::string(what) + ": permutation " + to_string(p) +
                                    " is not vexillary");
}

}  // namespace

std::set<Cell> FilledShape::cells() const {
    std::set<Cell> out;
    for (const auto& [cell, label] : fill) out.insert(cell);
    return out;
}

int FilledShape::max_label() const {
    int m = 0;
    for (const auto& [cell, label] : fill) m = std::max(m, label);
    return m;
}

int psw_degree(const Permutation& p) {
    const Code r = rajchgot_code(p);
    return std::accumulate(r.begin(), r.end(), 0);
}

std::map<Cell, int> rothe_labels(const Permutation& p) {
    require_vexillary(p, "rothe_labels");
    std::map<Cell, int> out;
    for (const Cell& blank : Bpd::rothe(p).blanks()) {
        int pipes_nw = 0;
        for (int k = 1; k < blank.row; ++k)
            if (p(k) < blank.col) ++pipes_nw;
        out.emplace(blank, pipes_nw);
    }
    return out;
}

FilledShape lambda_filled(const Permutation& p) {
    require_vexillary(p, "lambda_filled");
    const int n = p.size();
    const std::map<Cell, int> labels = rothe_labels(p);

    // Cell counts per diagonal, indexed by col - row + n.
    std::vector<int> remaining(static_cast<size_t>(2 * n), 0);
    for (const auto& [cell, label] : labels) ++remaining[static_cast<size_t>(cell.col - cell.row + n)];

    FilledShape shape;
    // Greedy row-by-row realization: each row takes the longest prefix of
    // diagonals that still have cells to place.
    int prev = n;
    for (int r = 1;; ++r) {
        int len = 0;
        while (len < prev && remaining[static_cast<size_t>((len + 1) - r + n)] > 0) ++len;
        if (len == 0) break;
        for (int c = 1; c <= len; ++c) --remaining[static_cast<size_t>(c - r + n)];
        shape.rows.push_back(len);
        prev = len;
    }
    for (int d = 0; d < 2 * n; ++d)
        if (remaining[static_cast<size_t>(d)] != 0)
            throw std::logic_error("lambda_filled: diagonal counts admit no Young diagram for " +
                                   to_string(p));

    // Transport labels along each diagonal in north-west to south-east order.
    std::map<int, std::vector<Cell>> source, target;
    for (const auto& [cell, label] : labels) source[cell.col - cell.row].push_back(cell);
    for (int r = 1; r <= static_cast<int>(shape.rows.size()); ++r)
        for (int c = 1; c <= shape.rows[static_cast<size_t>(r) - 1]; ++c)
            target[c - r].push_back({r, c});
    for (auto& [d, cells] : source) {
        auto& dest = target[d];
        std::sort(cells.begin(), cells.end());
        std::sort(dest.begin(), dest.end());
        for (size_t i = 0; i < cells.size(); ++i)
            shape.fill.emplace(dest[i], labels.at(cells[i]));
    }
    return shape;
}

std::set<Cell> tau(const FilledShape& shape, int k) {
    std::set<Cell> out;
    for (const auto& [cell, label] : shape.fill)
        if (label >= k) out.insert(cell);
    return out;
}

int rho_a(const std::set<Cell>& cells) {
    // Sort by row descending, column descending within a row, then take the
    // longest strictly increasing subsequence of columns.
    std::vector<Cell> order(cells.begin(), cells.end());
    std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
        if (a.row != b.row) return a.row > b.row;
        return a.col > b.col;
    });
    std::vector<int> best(order.size(), 1);
    int longest = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (order[j].row > order[i].row && order[j].col < order[i].col)
                best[i] = std::max(best[i], best[j] + 1);
        longest = std::max(longest, best[i]);
    }
    return longest;
}

int rrw_degree(const Permutation& p) {
    require_vexillary(p, "rrw_degree");
    const FilledShape shape = lambda_filled(p);
    int total = length(p);
    for (int k = 1; k <= shape.max_label(); ++k) total += rho_a(tau(shape, k));
    return total;
}

std::map<int, BridgeRow> corollary_bridge(const Permutation& p, RankBy by) {
    require_vexillary(p, "corollary_bridge");
    const int n = p.size();
    const Code r = rajchgot_code(p);
    const Code c = lehmer_code(p);
    const Permutation inv = p.inverse();
    const std::vector<int> ranks = rank_profile(p, by);
    const FilledShape shape = lambda_filled(p);

    std::map<int, BridgeRow> out;
    for (int i = 1; i <= n; ++i) {
        // Under the position reading i indexes positions and r - c applies
        // at i; under the value reading i is a pipe label and r - c applies
        // at its position w^-1(i).
        const int pos = (by == RankBy::Position) ? i : inv(i);
        out[ranks[static_cast<size_t>(i) - 1]].lhs +=
            r[static_cast<size_t>(pos) - 1] - c[static_cast<size_t>(pos) - 1];
    }
    for (int k = 1; k <= shape.max_label(); ++k) out[k].rhs = rho_a(tau(shape, k));
    return out;
}

}  // namespace bpd
