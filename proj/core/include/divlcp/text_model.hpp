#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "divlcp/index_cell.hpp"

namespace divlcp {

inline constexpr int kSigma = 256;

using Text = std::span<const std::uint8_t>;

enum class SuffixType : std::uint8_t { A, B, BStar };

std::vector<SuffixType> classify(Text text);

// bucketA per first character; B and B* counts share one sigma^2 table.
// B(c0,c1) lives at c0*sigma+c1 with c0 <= c1, B*(c0,c1) at c1*sigma+c0 with
// c0 < c1, so the two never collide.
template <IndexCell I>
struct BucketTables {
    std::vector<I> a = std::vector<I>(kSigma, 0);
    std::vector<I> ab = std::vector<I>(kSigma * kSigma, 0);

    I& A(int c0) { return a[c0]; }
    I A(int c0) const { return a[c0]; }
    I& B(int c0, int c1) { return ab[c0 * kSigma + c1]; }
    I B(int c0, int c1) const { return ab[c0 * kSigma + c1]; }
    I& BStar(int c0, int c1) { return ab[c1 * kSigma + c0]; }
    I BStar(int c0, int c1) const { return ab[c1 * kSigma + c0]; }
};

// Counts bucket sizes and writes the B* positions in text order to
// SA[n-m, n). Returns m.
template <IndexCell I>
I count_buckets(Text text, BucketTables<I>& bt, std::span<I> sa);

// Turns counts into offsets: bucketA[c] becomes the first SA index of the
// c-bucket, B*(c0,c1) the exclusive end of its references inside [0, m).
// B counts are left alone; the distribution step needs them.
template <IndexCell I>
void prefix_sums(BucketTables<I>& bt);

// Fills SA[0, m) with references into PAb grouped by (c0,c1)-bucket. The
// reference of the last B* suffix goes to the front of its bucket.
template <IndexCell I>
void build_bstar_references(Text text, BucketTables<I>& bt, std::span<I> sa, I m);

}  // namespace divlcp
