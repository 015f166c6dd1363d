#include "divlcp/induce.hpp"

namespace divlcp {

template <IndexCell I>
void induce_b_suffixes(Text text, BucketTables<I>& bt, std::span<I> sa, I m) {
    if (m <= 0) return;
    NoListener<I> none;
    detail::induce_b(text, bt, sa.data(), none);
}

template <IndexCell I>
void seed_last_suffix(Text text, BucketTables<I>& bt, std::span<I> sa) {
    if (text.size() < 2) return;
    NoListener<I> none;
    detail::seed_last(text, bt, sa.data(), none);
}

template <IndexCell I>
void induce_a_suffixes(Text text, BucketTables<I>& bt, std::span<I> sa) {
    NoListener<I> none;
    detail::induce_a(text, bt, sa.data(), none);
}

template <IndexCell I>
I prepare_bstar(Text text, BucketTables<I>& bt, std::span<I> sa, const BuildConfig& cfg) {
    const std::size_t n = text.size();
    check_capacity<I>(n);
    if (n <= 1) {
        if (n == 1) sa[0] = 0;
        return -1;
    }
    const I m = count_buckets(text, bt, sa);
    prefix_sums(bt);
    build_bstar_references(text, bt, sa, m);
    sort_all_bstar_substrings(text, bt, sa, m, cfg.sort);
    rank_bstar_suffixes(sa, m, cfg.doubling);
    finalize_bstar_order(text, bt, sa, m);
    return m;
}

template <IndexCell I>
void build_sa(Text text, std::span<I> sa, const BuildConfig& cfg) {
    BucketTables<I> bt;
    const I m = prepare_bstar(text, bt, sa, cfg);
    if (m < 0) return;
    induce_b_suffixes(text, bt, sa, m);
    seed_last_suffix(text, bt, sa);
    induce_a_suffixes(text, bt, sa);
}

#define DIVLCP_INSTANTIATE(I)                                                      \
    template I prepare_bstar<I>(Text, BucketTables<I>&, std::span<I>, const BuildConfig&); \
    template void build_sa<I>(Text, std::span<I>, const BuildConfig&);             \
    template void induce_b_suffixes<I>(Text, BucketTables<I>&, std::span<I>, I);   \
    template void seed_last_suffix<I>(Text, BucketTables<I>&, std::span<I>);       \
    template void induce_a_suffixes<I>(Text, BucketTables<I>&, std::span<I>);

DIVLCP_INSTANTIATE(std::int32_t)
DIVLCP_INSTANTIATE(std::int64_t)

}  // namespace divlcp
