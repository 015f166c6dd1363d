#include "divlcp/lcp_induce.hpp"

#include <algorithm>
#include <array>

namespace divlcp {

namespace {

// Where every bucket part starts, from the raw counts. Within a c0-bucket:
// all A suffixes, the B part of (c0,c0), then per c1 > c0 its B* then B part.
// Also the start of every (c0,c1)-bucket, so the scans can tell bucket
// changes without looking at the text. The one-character suffix n-1 forms a
// bucket of its own at the front of its c0-bucket.
template <class I>
struct Layout {
    std::vector<I> c0_start = std::vector<I>(kSigma + 1, 0);
    std::vector<I> a_end = std::vector<I>(kSigma, 0);
    std::vector<I> b_part = std::vector<I>(kSigma * kSigma, 0);  // (c0,c1) at c0*sigma+c1
    std::vector<I> bucket_start;                                  // ascending, one per bucket
    std::vector<std::uint8_t> bucket_c0;
    std::vector<I> last_bucket = std::vector<I>(kSigma, -1);     // per c0

    I bpart(int c0, int c1) const { return b_part[c0 * kSigma + c1]; }
};

template <class I>
void index_buckets(Text T, Layout<I>& L) {
    const std::size_t n = T.size();
    std::vector<I> pairs(kSigma * kSigma, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) ++pairs[T[i] * kSigma + T[i + 1]];
    I pos = 0;
    for (int c0 = 0; c0 < kSigma; ++c0) {
        auto open = [&](I size) {
            L.bucket_start.push_back(pos);
            L.bucket_c0.push_back(static_cast<std::uint8_t>(c0));
            L.last_bucket[c0] = static_cast<I>(L.bucket_start.size()) - 1;
            pos += size;
        };
        if (c0 == T[n - 1]) open(1);
        for (int c1 = 0; c1 < kSigma; ++c1)
            if (const I k = pairs[c0 * kSigma + c1]; k > 0) open(k);
    }
}

// Builds the layout, wipes every non-B* cell, and sets the LCP at each
// bucket border that no scan will write: 0 at a c0 start, 1 at a (c0,c1)
// start inside the c0-bucket.
template <class I>
Layout<I> lay_out(Text T, const BucketTables<I>& cnt, I* LCP) {
    const I n = static_cast<I>(T.size());
    Layout<I> L;
    I pos = 0;
    for (int c0 = 0; c0 < kSigma; ++c0) {
        const I start = pos;
        L.c0_start[c0] = start;
        pos += cnt.A(c0);
        L.a_end[c0] = pos;
        pos += cnt.B(c0, c0);
        std::fill(LCP + start, LCP + pos, kLcpUnset<I>);
        if (start < n) LCP[start] = 0;
        for (int c1 = c0 + 1; c1 < kSigma; ++c1) {
            const I b_start = pos;
            pos += cnt.BStar(c0, c1);
            L.b_part[c0 * kSigma + c1] = pos;
            std::fill(LCP + pos, LCP + pos + cnt.B(c0, c1), kLcpUnset<I>);
            pos += cnt.B(c0, c1);
            if (pos > b_start) LCP[b_start] = b_start > start ? 1 : 0;
        }
    }
    L.c0_start[kSigma] = pos;
    index_buckets(T, L);
    return L;
}

// Follows both inducing scans. When suffix s-1 lands next to the suffix the
// same bucket received last, their lcp is one more than the lcp of the two
// inducers, which is a range minimum over the LCP cells scanned in between.
template <class I>
class LcpListener {
public:
    LcpListener(Text T, I* SA, I* LCP, const BucketTables<I>& cnt, const Layout<I>& L)
        : T_(T), n_(static_cast<I>(T.size())), SA_(SA), LCP_(LCP), cnt_(cnt), L_(L),
          right_(ScanDirection::RightToLeft, n_), left_(ScanDirection::LeftToRight, n_) {}

    void begin_b_scan(int c1) {
        key_ = L_.last_bucket[c1];
        fresh_ = true;
        right_.reset();
        prev_.fill({I(-1), 0});
    }

    void scan_b(I j) {
        if (j < L_.bucket_start[key_]) {
            do --key_;
            while (j < L_.bucket_start[key_]);
            right_.reset();
            fresh_ = true;
        }
        if (fresh_)
            fresh_ = false;
        else
            right_.update(j + 1, LCP_[j + 1]);
    }

    void induce_b(I j, I s, I u, int c0, int c1) {
        Prev& p = prev_[c0];
        if (p.w >= 0) LCP_[u + 1] = p.key == key_ ? right_.rmq(p.w) + 1 : 2;
        p = {j, key_};
        // Leftmost B suffix right after the B* suffixes of its bucket.
        if (c0 < c1 && u == L_.bpart(c0, c1) && cnt_.BStar(c0, c1) > 0)
            LCP_[u] = border_lcp<I>(T_, decode(SA_[u - 1]), s - 1, c1);
    }

    void seed(I u, int c) {
        prev_.fill({I(-1), 0});
        key_ = -1;
        left_.reset();
        if (u == L_.a_end[c] - 1 && cnt_.B(c, c) > 0)
            LCP_[u + 1] = border_lcp<I>(T_, n_ - 1, decode(SA_[u + 1]), c);
    }

    void scan_a(I i) {
        const I nb = static_cast<I>(L_.bucket_start.size());
        if (key_ + 1 < nb && i >= L_.bucket_start[key_ + 1]) {
            do ++key_;
            while (key_ + 1 < nb && i >= L_.bucket_start[key_ + 1]);
            left_.reset();
            fresh_ = true;
        }
        if (fresh_)
            fresh_ = false;
        else
            left_.update(i, LCP_[i]);
    }

    void induce_a(I i, I s, I u, int c0) {
        Prev& p = prev_[c0];
        if (p.w >= 0)
            LCP_[u] = p.key == key_ ? left_.rmq(p.w + 1) + 1 : (L_.bucket_c0[p.key] == L_.bucket_c0[key_] ? 2 : 1);
        else if (u > L_.c0_start[c0])
            LCP_[u] = 1;  // only the one-character last suffix is in front
        p = {i, key_};
        // Last A suffix in front of the B part of (c0,c0).
        if (u == L_.a_end[c0] - 1 && cnt_.B(c0, c0) > 0)
            LCP_[u + 1] = border_lcp<I>(T_, s - 1, decode(SA_[u + 1]), c0);
    }

private:
    struct Prev {
        I w;
        I key;
    };

    Text T_;
    I n_;
    I* SA_;
    I* LCP_;
    const BucketTables<I>& cnt_;
    const Layout<I>& L_;
    MinStack<I> right_, left_;
    I key_ = -1;  // index of the bucket the scan is in
    bool fresh_ = true;
    std::array<Prev, kSigma> prev_{};
};

}  // namespace

template <IndexCell I>
void sparse_phi_bstar_lcp(Text text, std::span<I> sa, std::span<I> lcp, I m) {
    if (m <= 0) return;
    const I n = static_cast<I>(text.size());
    I* SA = sa.data();
    const I* pab = SA + n - m;
    const I* isab = SA + m;
    I* phi = lcp.data() + m;
    I* delta = lcp.data() + n - m;

    for (I i = 0; i < m; ++i) SA[isab[i]] = i;
    for (I i = 0; i + 1 < m; ++i) delta[i] = pab[i + 1] - pab[i];
    phi[SA[0]] = -1;
    for (I r = 1; r < m; ++r) phi[SA[r]] = pab[SA[r - 1]];

    I p = 0;
    for (I i = 0; i < m; ++i) {
        if (phi[i] < 0) {
            p = 0;
        } else {
            const I x = pab[i], j = phi[i];
            while (x + p < n && j + p < n && text[x + p] == text[j + p]) ++p;
        }
        phi[i] = p;
        // Carrying the match over to the next B* suffix is only safe while
        // at least two characters survive the shift: then the shifted
        // predecessor shares the next suffix's bucket and must itself be B*.
        if (i + 1 < m) p = p - delta[i] >= 2 ? p - delta[i] : 0;
    }
    for (I i = 0; i < m; ++i) lcp[isab[i]] = phi[i];
}

template <IndexCell I>
void naive_bstar_lcp(Text text, std::span<const I> sa, std::span<I> lcp, I m) {
    if (m <= 0) return;
    const I n = static_cast<I>(text.size());
    lcp[0] = 0;
    for (I r = 1; r < m; ++r) {
        const I a = decode(sa[r - 1]), b = decode(sa[r]);
        I k = 0;
        while (a + k < n && b + k < n && text[a + k] == text[b + k]) ++k;
        lcp[r] = k;
    }
}

template <IndexCell I>
void build_sa_lcp(Text text, std::span<I> sa, std::span<I> lcp, const BuildConfig& cfg) {
    const std::size_t len = text.size();
    check_capacity<I>(len);
    if (len <= 1) {
        if (len == 1) sa[0] = 0, lcp[0] = 0;
        return;
    }
    const I n = static_cast<I>(len);
    BucketTables<I> bt;
    const I m = count_buckets(text, bt, sa);
    const BucketTables<I> cnt = bt;
    prefix_sums(bt);
    build_bstar_references(text, bt, sa, m);
    sort_all_bstar_substrings(text, bt, sa, m, cfg.sort);
    rank_bstar_suffixes(sa, m, cfg.doubling);
    if (m > 0) {
        const bool sparse = 3 * static_cast<std::int64_t>(m) <= n;
        if (sparse) sparse_phi_bstar_lcp(text, sa, lcp, m);
        place_bstar_positions(text, sa, m);
        if (!sparse) naive_bstar_lcp<I>(text, sa, lcp, m);
        I* L = lcp.data();
        distribute_bstar(bt, sa, n, m, [L](I dst, I src) { L[dst] = L[src]; });
    }
    const Layout<I> layout = lay_out(text, cnt, lcp.data());
    LcpListener<I> lis(text, sa.data(), lcp.data(), cnt, layout);
    if (m > 0) detail::induce_b(text, bt, sa.data(), lis);
    detail::seed_last(text, bt, sa.data(), lis);
    detail::induce_a(text, bt, sa.data(), lis);
}

#define DIVLCP_INSTANTIATE(I)                                                              \
    template void sparse_phi_bstar_lcp<I>(Text, std::span<I>, std::span<I>, I);            \
    template void naive_bstar_lcp<I>(Text, std::span<const I>, std::span<I>, I);           \
    template void build_sa_lcp<I>(Text, std::span<I>, std::span<I>, const BuildConfig&);

DIVLCP_INSTANTIATE(std::int32_t)
DIVLCP_INSTANTIATE(std::int64_t)

}  // namespace divlcp
