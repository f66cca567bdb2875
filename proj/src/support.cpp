#include "bpd/support.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bpd/degree.hpp"
#include "bpd/moves.hpp"

namespace bpd {

namespace {

void require_vexillary(const Permutation& p, const char* what) {
    if (!is_vexillary(p))
        throw std::invalid_argument(std::string(what) + ": permutation " + to_string(p) +
                                    " is not vexillary");
}

std::string exponents_str(const Exponents& e) {
    std::string out = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

// r_{w^-1(i)} - c_{w^-1(i)} per pipe label i.
std::vector<int> pipe_bounds(const Permutation& p) {
    const Code r = rajchgot_code(p);
    const Code c = lehmer_code(p);
    const Permutation inv = p.inverse();
    std::vector<int> bound(static_cast<size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) {
        const int pos = inv(i);
        bound[static_cast<size_t>(i) - 1] =
            r[static_cast<size_t>(pos) - 1] - c[static_cast<size_t>(pos) - 1];
    }
    return bound;
}

}  // namespace

std::set<Bpd> max_degree_bpds(const Permutation& p) {
    require_vexillary(p, "max_degree_bpds");
    const int target = psw_degree(p) - length(p);
    std::set<Bpd> out;
    for (const Bpd& b : enumerate_pipes(p))
        if (static_cast<int>(b.up_elbows().size()) == target) out.insert(b);
    return out;
}

CheckReport check_up_elbow_bound(const Permutation& p) {
    CheckReport report{"elbow-bound"};
    const std::vector<int> bound = pipe_bounds(p);
    for (const Bpd& b : enumerate_pipes(p)) {
        ++report.checked;
        const std::vector<int> ups = up_elbows_per_pipe(b);
        for (int i = 1; i <= p.size(); ++i)
            if (ups[static_cast<size_t>(i) - 1] > bound[static_cast<size_t>(i) - 1]) {
                std::ostringstream detail;
                detail << "pipe " << i << " has " << ups[static_cast<size_t>(i) - 1]
                       << " up-elbows, bound " << bound[static_cast<size_t>(i) - 1];
                report.violations.push_back({p, detail.str(), b.ascii()});
            }
    }
    return report;
}

CheckReport check_same_row_col(const Permutation& p) {
    require_vexillary(p, "check_same_row_col");
    CheckReport report{"same-row-col"};
    // up-elbow cells per pipe and ordinal, across all maximal-degree BPDs
    std::map<std::pair<int, int>, std::vector<Cell>> positions;
    for (const Bpd& b : max_degree_bpds(p)) {
        ++report.checked;
        const auto traces = trace_pipes(b);
        for (int i = 1; i <= p.size(); ++i) {
            const auto& ups = traces[static_cast<size_t>(i) - 1].up_elbow_cells;
            for (size_t j = 0; j < ups.size(); ++j)
                positions[{i, static_cast<int>(j)}].push_back(ups[j]);
        }
    }
    for (const auto& [key, cells] : positions) {
        const bool same_row = std::all_of(cells.begin(), cells.end(),
                                          [&](const Cell& c) { return c.row == cells.front().row; });
        const bool same_col = std::all_of(cells.begin(), cells.end(),
                                          [&](const Cell& c) { return c.col == cells.front().col; });
        if (!same_row && !same_col) {
            std::ostringstream detail;
            detail << "up-elbow " << key.second + 1 << " of pipe " << key.first
                   << " is in neither a fixed row nor a fixed column";
            report.violations.push_back({p, detail.str(), ""});
        }
    }
    return report;
}

CheckReport check_top_connectivity(const Permutation& p) {
    require_vexillary(p, "check_top_connectivity");
    CheckReport report{"connectivity"};
    const std::set<Bpd> top = max_degree_bpds(p);
    report.checked = static_cast<long long>(top.size());
    if (top.empty()) {
        report.violations.push_back({p, "no maximal-degree pipe dream found", ""});
        return report;
    }
    std::set<Bpd> seen{*top.begin()};
    std::vector<Bpd> queue{*top.begin()};
    while (!queue.empty()) {
        const Bpd cur = std::move(queue.back());
        queue.pop_back();
        for (auto& [kind, next] : local_moves_tagged(cur)) {
            if (!is_slide_move(kind)) continue;
            if (!top.count(next))
                throw std::logic_error("slide move left the maximal-degree set");
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    for (const Bpd& b : top)
        if (!seen.count(b))
            report.violations.push_back({p, "not reachable by slide moves", b.ascii()});
    return report;
}

CheckReport check_up_by_one(const Permutation& p) {
    CheckReport report{"up-by-one"};
    const std::set<Exponents> supp = support(groth_bpd(p));
    const int top = psw_degree(p);
    for (const Exponents& e : supp) {
        if (total_degree(e) >= top) continue;
        ++report.checked;
        bool found = false;
        for (size_t i = 0; i < e.size() && !found; ++i) {
            Exponents up = e;
            ++up[i];
            found = supp.count(up) != 0;
        }
        if (!found)
            report.violations.push_back({p, "no unit increment of " + exponents_str(e) +
                                                " is in the support", ""});
    }
    return report;
}

CheckReport check_down_by_one(const Permutation& p) {
    CheckReport report{"down-by-one"};
    const std::set<Exponents> supp = support(groth_bpd(p));
    const int bottom = length(p);
    for (const Exponents& e : supp) {
        if (total_degree(e) <= bottom) continue;
        ++report.checked;
        bool found = false;
        for (size_t i = 0; i < e.size() && !found; ++i) {
            if (e[i] == 0) continue;
            Exponents down = e;
            --down[i];
            found = supp.count(down) != 0;
        }
        if (!found)
            report.violations.push_back({p, "no unit decrement of " + exponents_str(e) +
                                                " is in the support", ""});
    }
    return report;
}

CheckReport check_interval_closure(const Permutation& p) {
    CheckReport report{"interval"};
    const std::set<Exponents> supp = support(groth_bpd(p));
    const std::vector<Exponents> list(supp.begin(), supp.end());
    auto leq = [](const Exponents& a, const Exponents& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    for (const Exponents& lo : list)
        for (const Exponents& hi : list) {
            if (lo == hi || !leq(lo, hi)) continue;
            ++report.checked;
            // walk the box [lo, hi] in odometer order
            Exponents e = lo;
            bool done = false;
            while (!done) {
                if (!supp.count(e)) {
                    report.violations.push_back(
                        {p, exponents_str(e) + " lies between " + exponents_str(lo) + " and " +
                                exponents_str(hi) + " but is missing", ""});
                    break;
                }
                done = true;
                for (size_t i = 0; i < e.size(); ++i) {
                    if (e[i] < hi[i]) {
                        ++e[i];
                        for (size_t j = 0; j < i; ++j) e[j] = lo[j];
                        done = false;
                        break;
                    }
                }
            }
        }
    return report;
}

CheckReport check_divisibility_saturation(const Permutation& p) {
    require_vexillary(p, "check_divisibility_saturation");
    CheckReport report{"saturation"};
    const std::set<Exponents> supp = support(groth_bpd(p));
    const int bottom = length(p);
    const int top = psw_degree(p);
    std::vector<Exponents> mins, maxs;
    for (const Exponents& e : supp) {
        if (total_degree(e) == bottom) mins.push_back(e);
        if (total_degree(e) == top) maxs.push_back(e);
    }
    auto leq = [](const Exponents& a, const Exponents& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    for (const Exponents& e : supp) {
        ++report.checked;
        const bool above = std::any_of(mins.begin(), mins.end(),
                                       [&](const Exponents& m) { return leq(m, e); });
        const bool below = std::any_of(maxs.begin(), maxs.end(),
                                       [&](const Exponents& m) { return leq(e, m); });
        if (!above)
            report.violations.push_back(
                {p, exponents_str(e) + " has no minimal-degree divisor in the support", ""});
        if (!below)
            report.violations.push_back(
                {p, exponents_str(e) + " has no maximal-degree multiple in the support", ""});
    }
    return report;
}

Exponents leading_exponent_formula(const Permutation& p, int k) {
    const int n = p.size();
    const int bottom = length(p);
    const int top = psw_degree(p);
    if (k < bottom || k > top)
        throw std::invalid_argument("leading_exponent_formula: k=" + std::to_string(k) +
                                    " outside [" + std::to_string(bottom) + "," +
                                    std::to_string(top) + "]");
    const Code r = rajchgot_code(p);
    const Code c = lehmer_code(p);
    const int excess = k - bottom;
    // smallest j with sum_{i>=j} (r_i - c_i) <= excess
    std::vector<int> suffix(static_cast<size_t>(n) + 2, 0);
    for (int i = n; i >= 1; --i)
        suffix[static_cast<size_t>(i)] = suffix[static_cast<size_t>(i) + 1] +
                                         r[static_cast<size_t>(i) - 1] - c[static_cast<size_t>(i) - 1];
    int j = 1;
    while (suffix[static_cast<size_t>(j)] > excess) ++j;
    Exponents e(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        if (i >= j)
            e[static_cast<size_t>(i) - 1] = r[static_cast<size_t>(i) - 1];
        else if (i == j - 1)
            e[static_cast<size_t>(i) - 1] =
                c[static_cast<size_t>(i) - 1] + excess - suffix[static_cast<size_t>(j)];
        else
            e[static_cast<size_t>(i) - 1] = c[static_cast<size_t>(i) - 1];
    }
    return e;
}

Exponents lex_last_exponent(const SparsePoly& f, int k) {
    const Exponents* best = nullptr;
    for (const auto& [e, coeff] : f.terms()) {
        if (total_degree(e) != k) continue;
        if (!best) {
            best = &e;
            continue;
        }
        // larger when read from x_n down to x_1
        if (std::lexicographical_compare(best->rbegin(), best->rend(), e.rbegin(), e.rend()))
            best = &e;
    }
    if (!best)
        throw std::invalid_argument("lex_last_exponent: empty homogeneous component k=" +
                                    std::to_string(k));
    return *best;
}

CheckReport check_leading_terms(const Permutation& p) {
    CheckReport report{"leading"};
    const SparsePoly g = groth_bpd(p);
    for (int k = length(p); k <= psw_degree(p); ++k) {
        ++report.checked;
        const Exponents expect = leading_exponent_formula(p, k);
        const Exponents actual = lex_last_exponent(g, k);
        if (expect != actual)
            report.violations.push_back({p, "degree " + std::to_string(k) + ": formula " +
                                                exponents_str(expect) + ", lex-last " +
                                                exponents_str(actual), ""});
    }
    return report;
}

CheckReport check_s_plus_one_leading(const Permutation& p) {
    CheckReport report{"s-plus-one"};
    const int bottom = length(p);
    if (psw_degree(p) == bottom) {
        report.skipped = true;
        return report;
    }
    report.checked = 1;
    const Code r = rajchgot_code(p);
    Exponents expect = lehmer_code(p);
    int largest = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (expect[static_cast<size_t>(i) - 1] < r[static_cast<size_t>(i) - 1]) largest = i;
    ++expect[static_cast<size_t>(largest) - 1];
    const Exponents actual = lex_last_exponent(groth_bpd(p), bottom + 1);
    if (expect != actual)
        report.violations.push_back({p, "expected " + exponents_str(expect) + ", lex-last " +
                                            exponents_str(actual), ""});
    return report;
}

}  // namespace bpd
