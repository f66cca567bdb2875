#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bpd {

// Permutation in one-line notation, 1-indexed: (*this)(i) = w(i) for i in 1..n.
// Immutable after construction; construction validates the bijection.
class Permutation {
public:
    static Permutation from_one_line(std::vector<int> values);
    static Permutation identity(int n);
    static Permutation longest(int n);  // w0 = n, n-1, ..., 1

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    // Right multiplication by the simple transposition s_i: swaps entries i, i+1.
    Permutation swap_positions(int i) const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> w) : word_(std::move(w)) {}
    std::vector<int> word_;
};

using Code = std::vector<int>;

// c_i = #{j > i : w(i) > w(j)}
Code lehmer_code(const Permutation& p);
// r_i = (n-i+1) minus the longest increasing subsequence of w(i..n) starting at w(i);
// the minimum number of deletions making the suffix increasing from its head.
Code rajchgot_code(const Permutation& p);
// Inversion count; equals the sum of the Lehmer code.
int length(const Permutation& p);
// 2143-avoidance.
bool is_vexillary(const Permutation& p);

// rank_w(i): length of the longest increasing chain ending at i, computed either
// over positions (j <= i, w(j) <= w(i), chain increasing in both) or over pipe
// labels (values j <= i with increasing positions w^-1).  The two are the same
// data up to reindexing by w; both are exposed because the source formula mixes
// the indexings.
enum class RankBy { Position, Value };
std::vector<int> rank_profile(const Permutation& p, RankBy by);

// Streams S_n in lexicographic order of one-line notation, one element at a time.
class PermutationStream {
public:
    explicit PermutationStream(int n);
    std::optional<Permutation> next();

private:
    std::vector<int> word_;
    bool done_ = false;
    bool first_ = true;
};

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// Comma-separated one-line notation, e.g. "2,1,4,3".
Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& p);

}  // namespace bpd
