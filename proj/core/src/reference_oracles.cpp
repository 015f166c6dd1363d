#include "divlcp/reference_oracles.hpp"

#include <algorithm>
#include <numeric>

namespace divlcp::oracle {

namespace {

// Plain lexicographic order, a proper prefix sorts first.
bool suffix_less(Text t, std::size_t a, std::size_t b) {
    return std::lexicographical_compare(t.begin() + a, t.end(), t.begin() + b, t.end());
}

std::size_t common_prefix(Text t, std::size_t a, std::size_t b) {
    std::size_t k = 0;
    while (a + k < t.size() && b + k < t.size() && t[a + k] == t[b + k]) ++k;
    return k;
}

}  // namespace

template <IndexCell I>
std::vector<I> naive_sa(Text text) {
    std::vector<I> sa(text.size());
    std::iota(sa.begin(), sa.end(), I{0});
    std::sort(sa.begin(), sa.end(), [text](I a, I b) { return suffix_less(text, a, b); });
    return sa;
}

template <IndexCell I>
std::vector<I> naive_lcp(Text text, const std::vector<I>& sa) {
    std::vector<I> lcp(sa.size(), 0);
    for (std::size_t i = 1; i < sa.size(); ++i)
        lcp[i] = static_cast<I>(common_prefix(text, sa[i - 1], sa[i]));
    return lcp;
}

template <IndexCell I>
std::vector<I> kasai_lcp(Text text, const std::vector<I>& sa) {
    const std::size_t n = sa.size();
    std::vector<I> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<I>(i);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[rank[i]] = static_cast<I>(h);
        if (h > 0) --h;
    }
    return lcp;
}

template <IndexCell I>
std::vector<I> phi_lcp(Text text, const std::vector<I>& sa) {
    const std::size_t n = sa.size();
    std::vector<I> lcp(n, 0);
    if (n == 0) return lcp;
    std::vector<I> phi(n), plcp(n);
    phi[sa[0]] = -1;
    for (std::size_t i = 1; i < n; ++i) phi[sa[i]] = sa[i - 1];
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (phi[i] < 0) {
            plcp[i] = 0;
            h = 0;
            continue;
        }
        const std::size_t j = phi[i];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        plcp[i] = static_cast<I>(h);
        if (h > 0) --h;
    }
    for (std::size_t i = 0; i < n; ++i) lcp[i] = plcp[sa[i]];
    return lcp;
}

template <IndexCell I>
bool verify_sa(Text text, const std::vector<I>& sa) {
    const std::size_t n = text.size();
    if (sa.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (I v : sa) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 1; i < n; ++i)
        if (!suffix_less(text, sa[i - 1], sa[i])) return false;
    return true;
}

#define DIVLCP_INSTANTIATE(I)                                                    \
    template std::vector<I> naive_sa<I>(Text);                                   \
    template std::vector<I> naive_lcp<I>(Text, const std::vector<I>&);           \
    template std::vector<I> kasai_lcp<I>(Text, const std::vector<I>&);           \
    template std::vector<I> phi_lcp<I>(Text, const std::vector<I>&);             \
    template bool verify_sa<I>(Text, const std::vector<I>&);

DIVLCP_INSTANTIATE(std::int32_t)
DIVLCP_INSTANTIATE(std::int64_t)

}  // namespace divlcp::oracle
