#pragma once

#include <cstddef>
#include <vector>

namespace mdim {

// Lexicographic k-combinations of {0,...,universe-1}. fn receives the index
// vector and returns false to stop early. Returns false when stopped.
template <typename Fn>
bool for_each_combination(std::size_t universe, std::size_t k, Fn &&fn) {
    if (k > universe) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return fn(idx);
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t> &>(idx)))
            return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == universe - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace mdim
