#pragma once

#include <set>
#include <string>
#include <vector>

#include "bpd/bpd.hpp"
#include "bpd/permutation.hpp"
#include "bpd/poly.hpp"

namespace bpd {

struct Violation {
    Permutation perm;
    std::string detail;
    std::string bpd_ascii;  // empty when no single grid is at fault
};

struct CheckReport {
    std::string property;
    long long checked = 0;  // objects inspected (BPDs, exponents, degrees...)
    bool skipped = false;   // the check did not apply (e.g. G = S)
    std::vector<Violation> violations;

    CheckReport() = default;
    explicit CheckReport(std::string prop) : property(std::move(prop)) {}
    bool passed() const { return violations.empty(); }
};

// Members of Pipes(p) whose fully-marked monomial reaches the Grothendieck
// degree: length(p) + |U(P)| = psw_degree(p).  Vexillary input only.
std::set<Bpd> max_degree_bpds(const Permutation& p);

// Pipe-wise bound: on the bump-resolved grid, pipe i has at most
// r_{w^-1(i)} - c_{w^-1(i)} up-elbows.  A theorem for vexillary p, a
// conjecture scan otherwise.
CheckReport check_up_elbow_bound(const Permutation& p);

// Across all maximal-degree pipe dreams, the j-th up-elbow of pipe i keeps
// either its row or its column.  Vexillary input only.
CheckReport check_same_row_col(const Permutation& p);

// The maximal-degree pipe dreams are connected by the up-elbow-preserving
// slide moves.  Vexillary input only.
CheckReport check_top_connectivity(const Permutation& p);

// Every non-maximal-degree support exponent admits a unit increment that
// stays in the support.
CheckReport check_up_by_one(const Permutation& p);
// Every non-minimal-degree support exponent admits a unit decrement.
CheckReport check_down_by_one(const Permutation& p);
// Componentwise intervals between support exponents stay in the support.
CheckReport check_interval_closure(const Permutation& p);
// Every support exponent sits above some minimal-degree exponent and below
// some maximal-degree exponent, componentwise.  Vexillary input only.
CheckReport check_divisibility_saturation(const Permutation& p);

// The closed-form leading exponent of the degree-k homogeneous component in
// any term order with x1 < x2 < ... < xn.  Requires length(p) <= k <=
// psw_degree(p).
Exponents leading_exponent_formula(const Permutation& p, int k);

// Ground truth: the support exponent of total degree k maximal when read
// from x_n down to x_1.  Errors when the component is empty.
Exponents lex_last_exponent(const SparsePoly& f, int k);

// leading_exponent_formula against lex_last_exponent for every valid k.
CheckReport check_leading_terms(const Permutation& p);

// The degree length(p)+1 leading term is the Lehmer monomial times x_i for
// the largest i with c_i < r_i; skipped when the degrees coincide.
CheckReport check_s_plus_one_leading(const Permutation& p);

}  // namespace bpd
