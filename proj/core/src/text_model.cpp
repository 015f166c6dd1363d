#include "divlcp/text_model.hpp"

namespace divlcp {

std::vector<SuffixType> classify(Text text) {
    const std::size_t n = text.size();
    std::vector<SuffixType> t(n);
    if (n == 0) return t;
    t[n - 1] = SuffixType::A;
    for (std::size_t i = n - 1; i-- > 0;) {
        if (text[i] > text[i + 1])
            t[i] = SuffixType::A;
        else if (text[i] < text[i + 1])
            t[i] = SuffixType::B;
        else
            t[i] = t[i + 1] == SuffixType::A ? SuffixType::A : SuffixType::B;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (t[i] == SuffixType::B && t[i + 1] == SuffixType::A) t[i] = SuffixType::BStar;
    return t;
}

template <IndexCell I>
I count_buckets(Text text, BucketTables<I>& bt, std::span<I> sa) {
    const I n = static_cast<I>(text.size());
    I m = n;
    if (n == 0) return 0;
    // Right to left: a run of A suffixes, then one B*, then a run of B.
    I i = n - 1;
    int c0 = text[n - 1], c1;
    while (i >= 0) {
        do {
            ++bt.A(c1 = c0);
        } while (--i >= 0 && (c0 = text[i]) >= c1);
        if (i < 0) break;
        ++bt.BStar(c0, c1);
        sa[--m] = i;
        for (--i, c1 = c0; i >= 0 && (c0 = text[i]) <= c1; --i, c1 = c0) ++bt.B(c0, c1);
    }
    return n - m;
}

template <IndexCell I>
void prefix_sums(BucketTables<I>& bt) {
    I i = 0, j = 0;  // i: A and B suffixes so far, j: B* suffixes so far
    for (int c0 = 0; c0 < kSigma; ++c0) {
        const I t = i + bt.A(c0);
        bt.A(c0) = i + j;
        i = t + bt.B(c0, c0);
        for (int c1 = c0 + 1; c1 < kSigma; ++c1) {
            j += bt.BStar(c0, c1);
            bt.BStar(c0, c1) = j;
            i += bt.B(c0, c1);
        }
    }
}

template <IndexCell I>
void build_bstar_references(Text text, BucketTables<I>& bt, std::span<I> sa, I m) {
    if (m == 0) return;
    const I n = static_cast<I>(text.size());
    const I* pab = sa.data() + n - m;
    for (I i = m - 2; i >= 0; --i) {
        const I t = pab[i];
        sa[--bt.BStar(text[t], text[t + 1])] = i;
    }
    const I t = pab[m - 1];
    sa[--bt.BStar(text[t], text[t + 1])] = m - 1;
}

#define DIVLCP_INSTANTIATE(I)                                                   \
    template I count_buckets<I>(Text, BucketTables<I>&, std::span<I>);         \
    template void prefix_sums<I>(BucketTables<I>&);                            \
    template void build_bstar_references<I>(Text, BucketTables<I>&, std::span<I>, I);

DIVLCP_INSTANTIATE(std::int32_t)
DIVLCP_INSTANTIATE(std::int64_t)

}  // namespace divlcp
