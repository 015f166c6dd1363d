#pragma once

#include <span>
#include <vector>

#include "divlcp/bstar_sort.hpp"
#include "divlcp/rank_doubling.hpp"
#include "divlcp/text_model.hpp"

namespace divlcp {

// Hooks for work that rides along the two scans. The default does nothing and
// compiles away; the LCP builder supplies its own.
template <IndexCell I>
struct NoListener {
    void begin_b_scan(int) {}
    void scan_b(I) {}
    void induce_b(I, I, I, int, int) {}
    void seed(I, int) {}
    void scan_a(I) {}
    void induce_a(I, I, I, int) {}
};

namespace detail {

// Right-to-left over the B part of every c1-bucket. Entry s > 0 sends s-1 to
// the right end of the (T[s-1], c1)-bucket; ~(s-1) when S(s-1) is an A suffix.
// Every scanned cell is flipped, so only A-suffix predecessors stay positive
// for the second scan.
template <IndexCell I, class L>
void induce_b(Text T, BucketTables<I>& bt, I* SA, L& lis) {
    for (int c1 = kSigma - 2; c1 >= 0; --c1) {
        lis.begin_b_scan(c1);
        const I lo = bt.BStar(c1, c1 + 1);
        for (I j = bt.A(c1 + 1) - 1; j >= lo; --j) {
            lis.scan_b(j);
            I s = SA[j];
            SA[j] = ~s;
            if (s <= 0) continue;
            const int c0 = T[--s];
            const I u = bt.B(c0, c1)--;
            lis.induce_b(j, s + 1, u, c0, c1);
            SA[u] = (s > 0 && T[s - 1] > c0) ? ~s : s;
        }
    }
}

template <IndexCell I, class L>
void seed_last(Text T, BucketTables<I>& bt, I* SA, L& lis) {
    const I n = static_cast<I>(T.size());
    const int c = T[n - 1];
    const I u = bt.A(c)++;
    SA[u] = (T[n - 2] < c) ? ~(n - 1) : (n - 1);
    lis.seed(u, c);
}

// Left-to-right over everything. Marked cells are restored; a positive entry
// s sends s-1 to the next free slot at the front of the T[s-1]-bucket, marked
// when S(s-1) will not induce anything itself.
template <IndexCell I, class L>
void induce_a(Text T, BucketTables<I>& bt, I* SA, L& lis) {
    const I n = static_cast<I>(T.size());
    for (I i = 0; i < n; ++i) {
        lis.scan_a(i);
        I s = SA[i];
        if (s <= 0) {
            SA[i] = ~s;
            continue;
        }
        const int c0 = T[--s];
        const I u = bt.A(c0)++;
        lis.induce_a(i, s + 1, u, c0);
        SA[u] = (s == 0 || T[s - 1] < c0) ? ~s : s;
    }
}

}  // namespace detail

// Expects the sorted B* suffixes distributed to their buckets.
template <IndexCell I>
void induce_b_suffixes(Text text, BucketTables<I>& bt, std::span<I> sa, I m);

template <IndexCell I>
void seed_last_suffix(Text text, BucketTables<I>& bt, std::span<I> sa);

template <IndexCell I>
void induce_a_suffixes(Text text, BucketTables<I>& bt, std::span<I> sa);

struct BuildConfig {
    SortConfig sort;
    DoublingConfig doubling;
};

// Everything up to and including the B* distribution. Returns m, or -1 when
// the text is too short for the pipeline (SA is then already final).
template <IndexCell I>
I prepare_bstar(Text text, BucketTables<I>& bt, std::span<I> sa, const BuildConfig& cfg);

// Full suffix array. Throws CapacityError if the text does not fit I.
template <IndexCell I>
void build_sa(Text text, std::span<I> sa, const BuildConfig& cfg = {});

template <IndexCell I>
std::vector<I> build_sa(Text text, const BuildConfig& cfg = {}) {
    std::vector<I> sa(text.size());
    build_sa<I>(text, sa, cfg);
    return sa;
}

}  // namespace divlcp
