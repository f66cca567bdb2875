#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bpd/permutation.hpp"

namespace bpd {

using Int = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

struct ExponentsHash {
    size_t operator()(const Exponents& e) const {
        size_t h = e.size();
        for (int x : e) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Exact integer multivariate polynomial; dense fixed-length exponent vectors
// mapped to nonzero coefficients.
class SparsePoly {
public:
    explicit SparsePoly(int vars) : vars_(vars) {}
    static SparsePoly constant(int vars, Int c);
    static SparsePoly monomial(Exponents e, Int c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int degree() const;      // max total degree; -1 for the zero polynomial
    int min_degree() const;  // min total degree; -1 for the zero polynomial

    const Int* coeff(const Exponents& e) const;
    void add_term(const Exponents& e, Int c);

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator-(const SparsePoly& other) const;

    SparsePoly times_var(int i) const;  // multiply by x_i, 1-indexed
    SparsePoly swap_vars(int i) const;  // the s_i action on x_i, x_{i+1}

    bool operator==(const SparsePoly& other) const;

    const std::unordered_map<Exponents, Int, ExponentsHash>& terms() const { return terms_; }
    // Terms in output order: total degree ascending, exponent vector
    // lexicographically descending within a degree.
    std::vector<std::pair<Exponents, Int>> sorted_terms() const;

private:
    int vars_;
    std::unordered_map<Exponents, Int, ExponentsHash> terms_;
};

// partial_i(f) = (f - s_i f)/(x_i - x_{i+1}); synthetic division along
// x_i - x_{i+1} with the zero remainder asserted.
SparsePoly divided_difference(const SparsePoly& f, int i);
// pi_i(f) = partial_i(f - x_{i+1} f)
SparsePoly pi_op(const SparsePoly& f, int i);

// Weigandt's marked-BPD sum over MPipes(p).
SparsePoly groth_bpd(const Permutation& p);
// Sum of blank-cell monomials over the reduced members of Pipes(p).
SparsePoly schubert_bpd(const Permutation& p);

enum class AscentPolicy { SmallestIndex, LargestIndex };
// Divided-difference recursions from the staircase monomial at w0; the
// result does not depend on the ascent policy.
SparsePoly groth_oracle(const Permutation& p, AscentPolicy policy = AscentPolicy::SmallestIndex);
SparsePoly schubert_oracle(const Permutation& p, AscentPolicy policy = AscentPolicy::SmallestIndex);

SparsePoly homogeneous_component(const SparsePoly& f, int k);
std::set<Exponents> support(const SparsePoly& f);
int degree(const SparsePoly& f);

// "x1 + x2 - x1*x2" style, terms in sorted_terms() order; "0" when zero.
std::string to_string(const SparsePoly& f);

}  // namespace bpd
