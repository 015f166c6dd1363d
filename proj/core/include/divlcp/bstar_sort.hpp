#pragma once

#include <span>

#include "divlcp/text_model.hpp"

namespace divlcp {

enum class Ordering { Less, Equal, Greater };

struct SortConfig {
    int block_size = 1024;
    int is_threshold = 8;
};

// PAb is SA[n-m, n): B* positions in text order. The substring of reference
// r spans T[PAb[r], PAb[r+1]+2), the last one runs to the end of the text.
template <IndexCell I>
struct BStarSubstrings {
    Text text;
    std::span<const I> pab;

    I size() const { return static_cast<I>(pab.size()); }
    I begin_of(I r) const { return pab[r]; }
    I end_of(I r) const {
        return r + 1 < size() ? pab[r + 1] + 2 : static_cast<I>(text.size());
    }
    // Character at offset depth, or -1 once the substring is exhausted.
    int key(I r, I depth) const {
        const I p = pab[r] + depth;
        return p < end_of(r) ? text[p] : -1;
    }
};

template <IndexCell I>
Ordering compare_bstar_substrings(const BStarSubstrings<I>& s, I r1, I r2, I depth);

// Sorts unmarked references. Equal substrings end up adjacent in ascending
// reference order with all but the first stored as ~ref.
template <IndexCell I>
void mkqs_introsort(const BStarSubstrings<I>& s, std::span<I> range, I depth,
                    const SortConfig& cfg = {});

template <IndexCell I>
void insertion_sort(const BStarSubstrings<I>& s, std::span<I> range, I depth);

template <IndexCell I>
void heapsort_fallback(const BStarSubstrings<I>& s, std::span<I> range, I depth,
                       const SortConfig& cfg = {});

// Sorts every (c0,c1)-bucket of SA[0, m) after build_bstar_references.
template <IndexCell I>
void sort_all_bstar_substrings(Text text, const BucketTables<I>& bt, std::span<I> sa, I m,
                               const SortConfig& cfg = {});

}  // namespace divlcp
