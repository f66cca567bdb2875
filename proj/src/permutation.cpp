#include "bpd/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bpd {

Permutation Permutation::from_one_line(std::vector<int> values) {
    if (values.empty())
        throw std::invalid_argument("permutation: empty one-line notation");
    const int n = static_cast<int>(values.size());
    std::vector<int> seen_at(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = values[static_cast<size_t>(i) - 1];
        if (v < 1 || v > n) {
            std::ostringstream msg;
            msg << "permutation: value " << v << " at index " << i
                << " outside 1.." << n;
            throw std::invalid_argument(msg.str());
        }
        if (seen_at[static_cast<size_t>(v)] != 0) {
            std::ostringstream msg;
            msg << "permutation: value " << v << " repeated at index " << i
                << " (first at index " << seen_at[static_cast<size_t>(v)] << ")";
            throw std::invalid_argument(msg.str());
        }
        seen_at[static_cast<size_t>(v)] = i;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i)
        inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::swap_positions(int i) const {
    std::vector<int> w = word_;
    std::swap(w[static_cast<size_t>(i) - 1], w[static_cast<size_t>(i)]);
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Code lehmer_code(const Permutation& p) {
    const int n = p.size();
    Code c(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++c[static_cast<size_t>(i) - 1];
    return c;
}

Code rajchgot_code(const Permutation& p) {
    const int n = p.size();
    // lis[i] = longest increasing subsequence of w(i..n) that starts at w(i)
    std::vector<int> lis(static_cast<size_t>(n) + 1, 0);
    Code r(static_cast<size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        int best = 0;
        for (int j = i + 1; j <= n; ++j)
            if (p(j) > p(i)) best = std::max(best, lis[static_cast<size_t>(j)]);
        lis[static_cast<size_t>(i)] = best + 1;
        r[static_cast<size_t>(i) - 1] = (n - i + 1) - lis[static_cast<size_t>(i)];
    }
    return r;
}

int length(const Permutation& p) {
    const Code c = lehmer_code(p);
    return std::accumulate(c.begin(), c.end(), 0);
}

bool is_vexillary(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (p(j) >= p(i)) continue;
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (p(i) < p(l) && p(l) < p(k)) return false;
        }
    return true;
}

std::vector<int> rank_profile(const Permutation& p, RankBy by) {
    const int n = p.size();
    // Chains increasing in both position and value; rank at i = longest chain
    // ending exactly at i.  The Value reading runs the same DP on the inverse.
    const Permutation q = (by == RankBy::Position) ? p : p.inverse();
    std::vector<int> rank(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int best = 0;
        for (int j = 1; j < i; ++j)
            if (q(j) < q(i)) best = std::max(best, rank[static_cast<size_t>(j) - 1]);
        rank[static_cast<size_t>(i) - 1] = best + 1;
    }
    return rank;
}

PermutationStream::PermutationStream(int n) {
    if (n < 1) throw std::invalid_argument("permutation stream: n must be >= 1");
    word_.resize(static_cast<size_t>(n));
    std::iota(word_.begin(), word_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return Permutation::from_one_line(word_);
    }
    if (!std::next_permutation(word_.begin(), word_.end())) {
        done_ = true;
        return std::nullopt;
    }
    return Permutation::from_one_line(word_);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    PermutationStream stream(n);
    while (auto p = stream.next()) fn(*p);
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("permutation: cannot parse entry '" + token + "'");
        }
    }
    return Permutation::from_one_line(std::move(values));
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p(i));
    }
    return out;
}

}  // namespace bpd
