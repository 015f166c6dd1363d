#include "divlcp/bstar_sort.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <utility>
#include <vector>

namespace divlcp {

namespace {

template <class I>
int ilg(I len) {
    return len <= 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(len)) - 1;
}

// Equal substrings are stored in ascending reference order so the result does
// not depend on which sorter or block layout produced it.
template <class I>
void finish_group(I* first, I* last) {
    if (last - first < 2) return;
    for (I* p = first; p != last; ++p) *p = decode(*p);
    std::sort(first, last);
    for (I* p = first + 1; p != last; ++p) *p = mark(*p);
}

template <class I>
int median3(const BStarSubstrings<I>& s, I depth, I* a, I* b, I* c) {
    int x = s.key(*a, depth), y = s.key(*b, depth), z = s.key(*c, depth);
    if (x > y) std::swap(x, y);
    if (y > z) y = z;
    return std::max(x, y);
}

template <class I>
int choose_pivot(const BStarSubstrings<I>& s, I depth, I* first, I* last) {
    const std::ptrdiff_t len = last - first;
    I* mid = first + len / 2;
    if (len <= 32) return median3(s, depth, first, mid, last - 1);
    const std::ptrdiff_t d = len / 8;
    const int a = median3(s, depth, first, first + d, first + 2 * d);
    const int b = median3(s, depth, mid - d, mid, mid + d);
    const int c = median3(s, depth, last - 1 - 2 * d, last - 1 - d, last - 1);
    int x = a, y = b, z = c;
    if (x > y) std::swap(x, y);
    if (y > z) y = z;
    return std::max(x, y);
}

template <class I>
void sift_down(const BStarSubstrings<I>& s, I depth, I* h, std::ptrdiff_t i, std::ptrdiff_t size) {
    const I v = h[i];
    const int kv = s.key(v, depth);
    for (std::ptrdiff_t child; (child = 2 * i + 1) < size; i = child) {
        int kc = s.key(h[child], depth);
        if (child + 1 < size) {
            const int kr = s.key(h[child + 1], depth);
            if (kr > kc) ++child, kc = kr;
        }
        if (kc <= kv) break;
        h[i] = h[child];
    }
    h[i] = v;
}

template <class I>
void heap_by_key(const BStarSubstrings<I>& s, I depth, I* first, I* last) {
    const std::ptrdiff_t size = last - first;
    for (std::ptrdiff_t i = size / 2; i-- > 0;) sift_down(s, depth, first, i, size);
    for (std::ptrdiff_t end = size - 1; end > 0; --end) {
        std::swap(first[0], first[end]);
        sift_down(s, depth, first, 0, end);
    }
}

template <class I>
struct Task {
    I* first;
    I* last;
    I depth;
    int budget;
};

template <class I>
void sort_range(const BStarSubstrings<I>& s, I* first, I* last, I depth, const SortConfig& cfg,
                bool heap_first) {
    std::vector<Task<I>> stack;
    stack.push_back({first, last, depth, heap_first ? 0 : ilg(last - first)});
    auto push_sorted = [&stack](Task<I> a, Task<I> b, Task<I> c) {
        // Larger parts go first so the smallest is popped next.
        Task<I> t[3] = {a, b, c};
        std::sort(t, t + 3, [](const Task<I>& x, const Task<I>& y) {
            return (x.last - x.first) > (y.last - y.first);
        });
        for (const Task<I>& x : t)
            if (x.last - x.first > 1) stack.push_back(x);
    };

    while (!stack.empty()) {
        const Task<I> t = stack.back();
        stack.pop_back();
        const std::ptrdiff_t len = t.last - t.first;
        if (len < cfg.is_threshold) {
            insertion_sort(s, std::span<I>(t.first, t.last), t.depth);
            continue;
        }
        if (t.budget == 0) {
            heap_by_key(s, t.depth, t.first, t.last);
            for (I* a = t.first; a < t.last;) {
                const int k = s.key(*a, t.depth);
                I* b = a + 1;
                while (b < t.last && s.key(*b, t.depth) == k) ++b;
                if (k < 0)
                    finish_group(a, b);
                else if (b - a > 1)
                    stack.push_back({a, b, t.depth + 1, ilg(b - a)});
                a = b;
            }
            continue;
        }

        const int v = choose_pivot(s, t.depth, t.first, t.last);
        I* lt = t.first;
        I* gt = t.last;
        for (I* p = t.first; p < gt;) {
            const int k = s.key(*p, t.depth);
            if (k < v)
                std::swap(*lt++, *p++);
            else if (k > v)
                std::swap(*p, *--gt);
            else
                ++p;
        }
        Task<I> eq{lt, gt, t.depth + 1, ilg(gt - lt)};
        if (v < 0) {
            finish_group(lt, gt);
            eq.last = eq.first;
        }
        push_sorted({t.first, lt, t.depth, t.budget - 1}, eq, {gt, t.last, t.depth, t.budget - 1});
    }
}

template <class I>
bool less_decoded(const BStarSubstrings<I>& s, I a, I b, I depth) {
    return compare_bstar_substrings(s, decode(a), decode(b), depth) == Ordering::Less;
}

// Stable merge of [lo,mid) and [mid,hi) without extra memory.
template <class I>
void rotation_merge(const BStarSubstrings<I>& s, I depth, I* lo, I* mid, I* hi) {
    const std::ptrdiff_t l = mid - lo, r = hi - mid;
    if (l == 0 || r == 0) return;
    if (l + r == 2) {
        if (less_decoded(s, *mid, *lo, depth)) std::swap(*lo, *mid);
        return;
    }
    auto cmp = [&](I a, I b) { return less_decoded(s, a, b, depth); };
    I *cut1, *cut2;
    if (l >= r) {
        cut1 = lo + l / 2;
        cut2 = std::lower_bound(mid, hi, *cut1, cmp);
    } else {
        cut2 = mid + r / 2;
        cut1 = std::upper_bound(lo, mid, *cut2, cmp);
    }
    I* nmid = std::rotate(cut1, mid, cut2);
    rotation_merge(s, depth, lo, cut1, nmid);
    rotation_merge(s, depth, nmid, cut2, hi);
}

template <class I>
void buffered_merge(const BStarSubstrings<I>& s, I depth, I* lo, I* mid, I* hi, I* buf) {
    I* bend = std::copy(lo, mid, buf);
    I* b = buf;
    I* r = mid;
    I* out = lo;
    // A marked cell equals its predecessor, so once one member of a group
    // wins, the rest of the group follows without comparing.
    while (b < bend && r < hi) {
        if (less_decoded(s, *r, *b, depth)) {
            do *out++ = *r++;
            while (r < hi && is_marked(*r));
        } else {
            do *out++ = *b++;
            while (b < bend && is_marked(*b));
        }
    }
    std::copy(b, bend, out);
}

// After merging, a group of equal substrings may straddle a seam: its right
// half starts with an unmarked reference. Rebuild every group from scratch.
template <class I>
void regroup(const BStarSubstrings<I>& s, I depth, I* first, I* last) {
    I* head = first;
    for (I* p = first + 1; p <= last; ++p) {
        if (p < last && (is_marked(*p) ||
                         compare_bstar_substrings(s, decode(*(p - 1)), *p, depth) == Ordering::Equal))
            continue;
        finish_group(head, p);
        head = p;
    }
}

template <class I>
void sort_bucket(const BStarSubstrings<I>& s, I* first, I* last, I* buf, std::ptrdiff_t bufsize,
                 const SortConfig& cfg) {
    const I depth = 2;  // both leading characters are shared within a bucket
    const std::ptrdiff_t len = last - first;
    const std::ptrdiff_t blk = std::max(cfg.block_size, 2);
    if (len <= blk) {
        sort_range(s, first, last, depth, cfg, false);
        return;
    }
    for (I* a = first; a < last; a += blk) sort_range(s, a, std::min(a + blk, last), depth, cfg, false);
    for (std::ptrdiff_t w = blk; w < len; w *= 2) {
        for (I* lo = first; lo + w < last; lo += 2 * w) {
            I* mid = lo + w;
            I* hi = (last - mid > w) ? mid + w : last;
            if (!less_decoded(s, *mid, *(mid - 1), depth)) continue;
            if (w <= bufsize)
                buffered_merge(s, depth, lo, mid, hi, buf);
            else
                rotation_merge(s, depth, lo, mid, hi);
        }
    }
    regroup(s, depth, first, last);
}

}  // namespace

template <IndexCell I>
Ordering compare_bstar_substrings(const BStarSubstrings<I>& s, I r1, I r2, I depth) {
    const auto& t = s.text;
    I p1 = s.begin_of(r1) + depth, p2 = s.begin_of(r2) + depth;
    const I e1 = s.end_of(r1), e2 = s.end_of(r2);
    for (; p1 < e1 && p2 < e2; ++p1, ++p2)
        if (t[p1] != t[p2]) return t[p1] < t[p2] ? Ordering::Less : Ordering::Greater;
    if (p1 < e1) return Ordering::Greater;
    if (p2 < e2) return Ordering::Less;
    return Ordering::Equal;
}

template <IndexCell I>
void mkqs_introsort(const BStarSubstrings<I>& s, std::span<I> range, I depth, const SortConfig& cfg) {
    if (range.size() > 1) sort_range(s, range.data(), range.data() + range.size(), depth, cfg, false);
}

template <IndexCell I>
void heapsort_fallback(const BStarSubstrings<I>& s, std::span<I> range, I depth, const SortConfig& cfg) {
    if (range.size() > 1) sort_range(s, range.data(), range.data() + range.size(), depth, cfg, true);
}

template <IndexCell I>
void insertion_sort(const BStarSubstrings<I>& s, std::span<I> range, I depth) {
    I* first = range.data();
    I* last = first + range.size();
    if (last - first < 2) return;
    for (I* i = first + 1; i < last; ++i) {
        const I v = *i;
        I* j = i;
        for (; j > first && compare_bstar_substrings(s, v, *(j - 1), depth) == Ordering::Less; --j)
            *j = *(j - 1);
        *j = v;
    }
    I* head = first;
    for (I* p = first + 1; p <= last; ++p) {
        if (p < last && compare_bstar_substrings(s, *head, *p, depth) == Ordering::Equal) continue;
        finish_group(head, p);
        head = p;
    }
}

template <IndexCell I>
void sort_all_bstar_substrings(Text text, const BucketTables<I>& bt, std::span<I> sa, I m,
                               const SortConfig& cfg) {
    if (m <= 1) return;
    const I n = static_cast<I>(text.size());
    const BStarSubstrings<I> s{text, std::span<const I>(sa.data() + n - m, m)};
    I* buf = sa.data() + m;
    const std::ptrdiff_t bufsize = n - 2 * m;
    I j = m;
    for (int c0 = kSigma - 2; c0 >= 0 && j > 0; --c0) {
        for (int c1 = kSigma - 1; c0 < c1; j = bt.BStar(c0, c1), --c1) {
            const I i = bt.BStar(c0, c1);
            if (j - i < 2) continue;
            I* first = sa.data() + i;
            I* last = sa.data() + j;
            const bool has_last = *first == m - 1;
            sort_bucket(s, first + has_last, last, buf, bufsize, cfg);
            if (!has_last) continue;
            // The last B* substring runs into the text end and can never be
            // equal to another one; slide it right past everything smaller.
            const I r = *first;
            I* a = first + 1;
            for (; a < last && (is_marked(*a) ||
                                compare_bstar_substrings(s, r, *a, I{2}) == Ordering::Greater);
                 ++a)
                *(a - 1) = *a;
            *(a - 1) = r;
        }
    }
}

#define DIVLCP_INSTANTIATE(I)                                                                    \
    template Ordering compare_bstar_substrings<I>(const BStarSubstrings<I>&, I, I, I);          \
    template void mkqs_introsort<I>(const BStarSubstrings<I>&, std::span<I>, I, const SortConfig&); \
    template void heapsort_fallback<I>(const BStarSubstrings<I>&, std::span<I>, I,              \
                                       const SortConfig&);                                       \
    template void insertion_sort<I>(const BStarSubstrings<I>&, std::span<I>, I);                \
    template void sort_all_bstar_substrings<I>(Text, const BucketTables<I>&, std::span<I>, I,    \
                                               const SortConfig&);

DIVLCP_INSTANTIATE(std::int32_t)
DIVLCP_INSTANTIATE(std::int64_t)

}  // namespace divlcp
