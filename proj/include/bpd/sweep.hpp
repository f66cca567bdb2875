#pragma once

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "bpd/permutation.hpp"

namespace bpd {

// Applies fn to every element of S_n and returns the results in lexicographic
// permutation order regardless of thread count.  Workers pull from a shared
// stream, so nothing of size n! is materialized.
template <typename R>
std::vector<std::pair<Permutation, R>> sweep_sn(
    int n, int threads, const std::function<R(const Permutation&)>& fn,
    const std::function<bool(const Permutation&)>& filter = nullptr) {
    std::vector<std::pair<long long, std::pair<Permutation, R>>> indexed;
    std::mutex stream_mutex, out_mutex;
    PermutationStream stream(n);
    long long counter = 0;

    auto worker = [&]() {
        for (;;) {
            std::optional<Permutation> p;
            long long index = 0;
            {
                std::lock_guard<std::mutex> lock(stream_mutex);
                for (;;) {
                    p = stream.next();
                    if (!p) break;
                    index = counter++;
                    if (!filter || filter(*p)) break;
                }
            }
            if (!p) return;
            R result = fn(*p);
            std::lock_guard<std::mutex> lock(out_mutex);
            indexed.emplace_back(index, std::make_pair(*p, std::move(result)));
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(indexed.begin(), indexed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Permutation, R>> out;
    out.reserve(indexed.size());
    for (auto& [index, item] : indexed) out.push_back(std::move(item));
    return out;
}

}  // namespace bpd
