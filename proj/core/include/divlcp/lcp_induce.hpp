#pragma once

#include <limits>
#include <span>
#include <vector>

#include "divlcp/induce.hpp"
#include "divlcp/min_stack.hpp"

namespace divlcp {

// Placeholder for LCP cells nobody has written yet.
template <IndexCell I>
inline constexpr I kLcpUnset = std::numeric_limits<I>::max();

// LCP of adjacent B* suffixes via a sparse Phi pass in text order. Needs the
// ranks in ISAb = SA[m, 2m) and the positions in PAb = SA[n-m, n), which only
// coexist while 3m <= n. Phi lives in LCP[m, 2m), the gaps between
// consecutive B* positions in LCP[n-m, n). Result: LCP[0, m) in rank order.
// Clobbers SA[0, m).
template <IndexCell I>
void sparse_phi_bstar_lcp(Text text, std::span<I> sa, std::span<I> lcp, I m);

// Same result by direct comparison, for when PAb is gone. Expects SA[0, m)
// to hold the (possibly marked) B* positions in rank order.
template <IndexCell I>
void naive_bstar_lcp(Text text, std::span<const I> sa, std::span<I> lcp, I m);

// lcp of suffixes i and j that both start with c0 c, counting how far both
// keep repeating c.
template <IndexCell I>
I border_lcp(Text text, I i, I j, int c) {
    const I n = static_cast<I>(text.size());
    I k = 1;
    while (i + k < n && j + k < n && text[i + k] == c && text[j + k] == c) ++k;
    return k;
}

template <IndexCell I>
void build_sa_lcp(Text text, std::span<I> sa, std::span<I> lcp, const BuildConfig& cfg = {});

template <IndexCell I>
struct SaLcp {
    std::vector<I> sa;
    std::vector<I> lcp;
};

template <IndexCell I>
SaLcp<I> build_sa_lcp(Text text, const BuildConfig& cfg = {}) {
    SaLcp<I> r{std::vector<I>(text.size()), std::vector<I>(text.size())};
    build_sa_lcp<I>(text, r.sa, r.lcp, cfg);
    return r;
}

}  // namespace divlcp
