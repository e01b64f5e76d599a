#pragma once

#include <cstddef>

namespace triwalk::detail {

// Sum of term(i) for i in [first, last) by recursive halving. The tree is
// fixed by the index range, so the result does not depend on how the terms
// are scheduled.
template <class T, class Term>
T pairwise_sum(std::size_t first, std::size_t last, const Term& term) {
    constexpr std::size_t kLeaf = 16;
    if (last - first <= kLeaf) {
        T acc{};
        for (std::size_t i = first; i < last; ++i) acc += term(i);
        return acc;
    }
    const std::size_t mid = first + (last - first) / 2;
    T acc = pairwise_sum<T>(first, mid, term);
    acc += pairwise_sum<T>(mid, last, term);
    return acc;
}

}  // namespace triwalk::detail
