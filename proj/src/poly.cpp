#include "bpd/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bpd/moves.hpp"

namespace bpd {

SparsePoly SparsePoly::constant(int vars, Int c) {
    SparsePoly f(vars);
    f.add_term(Exponents(static_cast<size_t>(vars), 0), std::move(c));
    return f;
}

SparsePoly SparsePoly::monomial(Exponents e, Int c) {
    SparsePoly f(static_cast<int>(e.size()));
    f.add_term(std::move(e), std::move(c));
    return f;
}

int SparsePoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

int SparsePoly::min_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int t = total_degree(e);
        if (d < 0 || t < d) d = t;
    }
    return d;
}

const Int* SparsePoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

void SparsePoly::add_term(const Exponents& e, Int c) {
    if (c == 0) return;
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
    SparsePoly out = *this;
    out += other;
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
    SparsePoly out = *this;
    out -= other;
    return out;
}

SparsePoly SparsePoly::times_var(int i) const {
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents shifted = e;
        ++shifted[static_cast<size_t>(i) - 1];
        out.terms_.emplace(std::move(shifted), c);
    }
    return out;
}

SparsePoly SparsePoly::swap_vars(int i) const {
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents swapped = e;
        std::swap(swapped[static_cast<size_t>(i) - 1], swapped[static_cast<size_t>(i)]);
        out.terms_.emplace(std::move(swapped), c);
    }
    return out;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
    if (vars_ != other.vars_ || terms_.size() != other.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
        const Int* oc = other.coeff(e);
        if (!oc || *oc != c) return false;
    }
    return true;
}

namespace {

// Output order: degree ascending, then exponent vector lexicographically
// descending, so x1 sorts before x2 within a degree.
bool term_order(const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

}  // namespace

std::vector<std::pair<Exponents, Int>> SparsePoly::sorted_terms() const {
    std::vector<std::pair<Exponents, Int>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return term_order(a.first, b.first); });
    return out;
}

SparsePoly divided_difference(const SparsePoly& f, int i) {
    if (i < 1 || i >= f.vars())
        throw std::invalid_argument("divided_difference: index out of range");
    SparsePoly numerator = f - f.swap_vars(i);
    SparsePoly quotient(f.vars());
    // Synthetic division by (x_i - x_{i+1}): repeatedly cancel a term with
    // the highest remaining x_i exponent.  Exactness is a theorem; a nonzero
    // remainder is an internal error.
    while (!numerator.is_zero()) {
        const Exponents* lead = nullptr;
        for (const auto& [e, c] : numerator.terms())
            if (!lead || e[static_cast<size_t>(i) - 1] > (*lead)[static_cast<size_t>(i) - 1] ||
                (e[static_cast<size_t>(i) - 1] == (*lead)[static_cast<size_t>(i) - 1] && e > *lead))
                lead = &e;
        if ((*lead)[static_cast<size_t>(i) - 1] == 0)
            throw std::logic_error("divided_difference: non-exact division");
        const Exponents head = *lead;
        const Int c = *numerator.coeff(head);
        Exponents q = head;
        --q[static_cast<size_t>(i) - 1];
        quotient.add_term(q, c);
        // numerator -= c * x^q * (x_i - x_{i+1})
        numerator.add_term(head, -c);
        ++q[static_cast<size_t>(i)];
        numerator.add_term(q, c);
    }
    return quotient;
}

SparsePoly pi_op(const SparsePoly& f, int i) {
    return divided_difference(f - f.times_var(i + 1), i);
}

SparsePoly groth_bpd(const Permutation& p) {
    const int n = p.size();
    const int ell = length(p);
    SparsePoly total(n);
    // Summing (-1)^{|S|} x^S over subsets S of U(P) factors into a product of
    // (1 - x_row) over the up-elbows.
    for (const Bpd& b : enumerate_pipes(p)) {
        Exponents blank_exp(static_cast<size_t>(n), 0);
        int blank_count = 0;
        for (const Cell& cell : b.blanks()) {
            ++blank_exp[static_cast<size_t>(cell.row) - 1];
            ++blank_count;
        }
        const Int sign = ((blank_count - ell) % 2 == 0) ? 1 : -1;
        SparsePoly term = SparsePoly::monomial(std::move(blank_exp), sign);
        for (const Cell& cell : b.up_elbows()) term -= term.times_var(cell.row);
        total += term;
    }
    return total;
}

SparsePoly schubert_bpd(const Permutation& p) {
    const int n = p.size();
    SparsePoly total(n);
    for (const Bpd& b : enumerate_pipes(p)) {
        if (!is_reduced(b)) continue;
        Exponents e(static_cast<size_t>(n), 0);
        for (const Cell& cell : b.blanks()) ++e[static_cast<size_t>(cell.row) - 1];
        total.add_term(e, 1);
    }
    return total;
}

namespace {

SparsePoly staircase(int n) {
    Exponents e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - 1 - i;
    return SparsePoly::monomial(std::move(e), 1);
}

int pick_ascent(const Permutation& p, AscentPolicy policy) {
    if (policy == AscentPolicy::SmallestIndex) {
        for (int i = 1; i < p.size(); ++i)
            if (p(i) < p(i + 1)) return i;
    } else {
        for (int i = p.size() - 1; i >= 1; --i)
            if (p(i) < p(i + 1)) return i;
    }
    return 0;
}

template <typename Op>
SparsePoly descent_recursion(const Permutation& p, AscentPolicy policy, Op&& op,
                             std::map<Permutation, SparsePoly>& memo) {
    if (const auto it = memo.find(p); it != memo.end()) return it->second;
    SparsePoly result(p.size());
    const int i = pick_ascent(p, policy);
    if (i == 0) {
        result = staircase(p.size());
    } else {
        // p * s_i has one more inversion; walk up to w0 and apply the
        // operator on the way back down.
        result = op(descent_recursion(p.swap_positions(i), policy, op, memo), i);
    }
    memo.emplace(p, result);
    return result;
}

}  // namespace

SparsePoly groth_oracle(const Permutation& p, AscentPolicy policy) {
    std::map<Permutation, SparsePoly> memo;
    return descent_recursion(
        p, policy, [](const SparsePoly& f, int i) { return pi_op(f, i); }, memo);
}

SparsePoly schubert_oracle(const Permutation& p, AscentPolicy policy) {
    std::map<Permutation, SparsePoly> memo;
    return descent_recursion(
        p, policy, [](const SparsePoly& f, int i) { return divided_difference(f, i); }, memo);
}

SparsePoly homogeneous_component(const SparsePoly& f, int k) {
    SparsePoly out(f.vars());
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == k) out.add_term(e, c);
    return out;
}

std::set<Exponents> support(const SparsePoly& f) {
    std::set<Exponents> out;
    for (const auto& [e, c] : f.terms()) out.insert(e);
    return out;
}

int degree(const SparsePoly& f) { return f.degree(); }

std::string to_string(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.sorted_terms()) {
        const bool negative = c < 0;
        const Int magnitude = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string factors;
        for (int i = 0; i < static_cast<int>(e.size()); ++i) {
            const int exp = e[static_cast<size_t>(i)];
            if (exp == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(i + 1);
            if (exp > 1) factors += "^" + std::to_string(exp);
        }
        if (factors.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += factors;
        }
    }
    return out;
}

}  // namespace bpd
