#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace causalex {

// Index subsets of {0..n-1} by ascending size, lexicographic within a size.
// fn returning false stops the enumeration.
inline void for_each_index_subset(std::size_t n, std::size_t min_size, std::size_t max_size,
                                  const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick;
    bool stop = false;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t start, std::size_t want) {
        if (stop) return;
        if (want == 0) {
            if (!fn(pick)) stop = true;
            return;
        }
        for (std::size_t i = start; i + want <= n && !stop; ++i) {
            pick.push_back(i);
            go(i + 1, want - 1);
            pick.pop_back();
        }
    };
    for (std::size_t k = min_size; k <= max_size && k <= n && !stop; ++k) go(0, k);
}

}  // namespace causalex
