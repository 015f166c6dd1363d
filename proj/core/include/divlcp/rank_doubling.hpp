#pragma once

#include <span>

#include "divlcp/text_model.hpp"

namespace divlcp {

struct DoublingConfig {
    bool detect_repetitions = true;
};

// ISAb is SA[m, 2m). Each sorted reference gets its exact rank, each group
// of equal B* substrings the index of its last member. The leftmost cell of a
// run of already sorted references is overwritten with minus its length.
template <IndexCell I>
void build_partial_isa(std::span<I> sa, I m);

// One prefix-doubling round with step h (in B* substrings). Returns true while
// some group is still tied.
template <IndexCell I>
bool doubling_pass(std::span<I> sa, I m, I h, const DoublingConfig& cfg = {});

// build_partial_isa followed by doubling rounds until every rank is unique.
template <IndexCell I>
void rank_bstar_suffixes(std::span<I> sa, I m, const DoublingConfig& cfg = {});

// Writes B* text positions to SA[rank] by a right-to-left text scan, as ~j
// when S(j-1) is an A suffix.
template <IndexCell I>
void place_bstar_positions(Text text, std::span<I> sa, I m);

// Moves the sorted B* positions from SA[0, m) to the front of their
// (c0,c1)-buckets, right to left, turning B(c0,c1) into bucket end points.
// B*(c0,c0+1) ends up as the first index of the (c0,c0) B region.
// move(dst, src) is called for every relocated cell.
template <IndexCell I, class Move>
void distribute_bstar(BucketTables<I>& bt, std::span<I> sa, I n, I m, Move&& move) {
    bt.B(kSigma - 1, kSigma - 1) = n;
    I k = m - 1;
    for (int c0 = kSigma - 2; c0 >= 0; --c0) {
        I i = bt.A(c0 + 1) - 1;
        for (int c1 = kSigma - 1; c0 < c1; --c1) {
            const I t = i - bt.B(c0, c1);
            bt.B(c0, c1) = i;
            for (i = t; bt.BStar(c0, c1) <= k; --i, --k) {
                sa[i] = sa[k];
                move(i, k);
            }
        }
        bt.BStar(c0, c0 + 1) = i - bt.B(c0, c0) + 1;
        bt.B(c0, c0) = i;
    }
}

template <IndexCell I>
void finalize_bstar_order(Text text, BucketTables<I>& bt, std::span<I> sa, I m);

}  // namespace divlcp
