#include "divlcp/rank_doubling.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace divlcp {

namespace {

template <class I>
int ilg(I len) {
    return len <= 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(len)) - 1;
}

template <class I>
struct Keyed {
    I key;
    I ref;
};

template <class I>
void sift_down(Keyed<I>* h, std::ptrdiff_t i, std::ptrdiff_t size) {
    const Keyed<I> v = h[i];
    for (std::ptrdiff_t child; (child = 2 * i + 1) < size; i = child) {
        if (child + 1 < size && h[child + 1].key > h[child].key) ++child;
        if (h[child].key <= v.key) break;
        h[i] = h[child];
    }
    h[i] = v;
}

template <class I>
void insertion_by_key(Keyed<I>* first, Keyed<I>* last) {
    for (Keyed<I>* i = first + 1; i < last; ++i) {
        const Keyed<I> v = *i;
        Keyed<I>* j = i;
        for (; j > first && v.key < (j - 1)->key; --j) *j = *(j - 1);
        *j = v;
    }
}

// Ternary quicksort on integer keys; heapsort once lg(len) rounds are spent.
template <class I>
void sort_by_key(Keyed<I>* first, Keyed<I>* last) {
    struct Range {
        Keyed<I>* first;
        Keyed<I>* last;
        int budget;
    };
    std::vector<Range> todo{{first, last, ilg(last - first)}};
    while (!todo.empty()) {
        Range r = todo.back();
        todo.pop_back();
        const std::ptrdiff_t len = r.last - r.first;
        if (len < 8) {
            insertion_by_key(r.first, r.last);
            continue;
        }
        if (r.budget == 0) {
            for (std::ptrdiff_t i = len / 2; i-- > 0;) sift_down(r.first, i, len);
            for (std::ptrdiff_t end = len - 1; end > 0; --end) {
                std::swap(r.first[0], r.first[end]);
                sift_down(r.first, 0, end);
            }
            continue;
        }
        I x = r.first->key, y = r.first[len / 2].key, z = r.last[-1].key;
        if (x > y) std::swap(x, y);
        if (y > z) y = z;
        const I v = x > y ? x : y;
        Keyed<I>* lt = r.first;
        Keyed<I>* gt = r.last;
        for (Keyed<I>* p = r.first; p < gt;) {
            if (p->key < v)
                std::swap(*lt++, *p++);
            else if (p->key > v)
                std::swap(*p, *--gt);
            else
                ++p;
        }
        Range lo{r.first, lt, r.budget - 1}, hi{gt, r.last, r.budget - 1};
        if (lo.last - lo.first < hi.last - hi.first) std::swap(lo, hi);
        if (lo.last - lo.first > 1) todo.push_back(lo);
        if (hi.last - hi.first > 1) todo.push_back(hi);
    }
}

template <class I>
class Doubler {
public:
    Doubler(std::span<I> sa, I m, I h, const DoublingConfig& cfg)
        : sa_(sa.data()), isa_(sa.data() + m), h_(h), cfg_(cfg),
          budget_(static_cast<std::int64_t>(m) * (1 + ilg(m) * 2 / 3)) {}

    // Sorts one tied group. Returns true when every member got its own rank.
    bool sort_group(I first, I last) {
        tasks_.push_back({Kind::Sort, first, last, h_, 0, 0});
        while (!tasks_.empty()) {
            const Task t = tasks_.back();
            tasks_.pop_back();
            if (t.kind == Kind::Copy) {
                copy(t);
                continue;
            }
            const I len = t.last - t.first;
            if (t.depth > h_) {
                // Looking further than h is optional refinement, paid for out
                // of a per-round budget. Without budget the group stays tied.
                if (budget_ < len) continue;
                budget_ -= len;
            }
            if (cfg_.detect_repetitions && isa_[sa_[t.first] + t.depth] == t.last - 1)
                detect_and_resolve_repetition(t);
            else
                refine(t);
        }
        for (I k = first; k < last; ++k)
            if (isa_[sa_[k]] != k) return false;
        return true;
    }

private:
    enum class Kind { Sort, Copy };
    struct Task {
        Kind kind;
        I first, last, depth;
        I a, b;  // = part of a repetition split, for Copy tasks
    };

    void refine(const Task& t) {
        keyed_.resize(t.last - t.first);
        for (I k = t.first; k < t.last; ++k) {
            const I r = sa_[k];
            keyed_[k - t.first] = {isa_[r + t.depth], r};
        }
        Keyed<I>* kf = keyed_.data();
        Keyed<I>* kl = kf + keyed_.size();
        sort_by_key(kf, kl);
        for (Keyed<I>* p = kf; p < kl;) {
            Keyed<I>* q = p + 1;
            while (q < kl && q->key == p->key) ++q;
            const I a = t.first + static_cast<I>(p - kf);
            const I b = t.first + static_cast<I>(q - kf);
            for (Keyed<I>* e = p; e < q; ++e) {
                sa_[t.first + (e - kf)] = e->ref;
                isa_[e->ref] = b - 1;
            }
            if (b - a > 1) tasks_.push_back({Kind::Sort, a, b, t.depth + h_, 0, 0});
            p = q;
        }
    }

    // The first member's successor at this depth lies in the same group, so
    // the group contains runs of a periodic substring. Split by where each
    // successor falls; the members whose successor stays inside the group are
    // ordered later by copying the order of the others.
    void detect_and_resolve_repetition(const Task& t) {
        const I v = t.last - 1;
        I a = t.first, b = t.last;
        for (I p = t.first; p < b;) {
            const I key = isa_[sa_[p] + t.depth];
            if (key < v)
                std::swap(sa_[a++], sa_[p++]);
            else if (key > v)
                std::swap(sa_[p], sa_[--b]);
            else
                ++p;
        }
        for (I k = t.first; k < a; ++k) isa_[sa_[k]] = a - 1;
        for (I k = a; k < b; ++k) isa_[sa_[k]] = b - 1;
        tasks_.push_back({Kind::Copy, t.first, t.last, t.depth, a, b});
        if (t.last - b > 1) tasks_.push_back({Kind::Sort, b, t.last, t.depth, 0, 0});
        if (a - t.first > 1) tasks_.push_back({Kind::Sort, t.first, a, t.depth, 0, 0});
    }

    void copy(const Task& t) {
        for (I k = t.first; k < t.a; ++k)
            if (isa_[sa_[k]] != k) return;
        for (I k = t.b; k < t.last; ++k)
            if (isa_[sa_[k]] != k) return;
        const I v = t.b - 1;
        I d = t.a - 1;
        for (I c = t.first; c <= d; ++c) {
            const I s = sa_[c] - t.depth;
            if (s >= 0 && isa_[s] == v) {
                sa_[++d] = s;
                isa_[s] = d;
            }
        }
        I e = d + 1;
        d = t.b;
        for (I c = t.last - 1; e < d; --c) {
            const I s = sa_[c] - t.depth;
            if (s >= 0 && isa_[s] == v) {
                sa_[--d] = s;
                isa_[s] = d;
            }
        }
    }

    I* sa_;
    I* isa_;
    I h_;
    const DoublingConfig& cfg_;
    std::int64_t budget_;
    std::vector<Task> tasks_;
    std::vector<Keyed<I>> keyed_;
};

}  // namespace

template <IndexCell I>
void build_partial_isa(std::span<I> sa, I m) {
    I* SA = sa.data();
    I* isa = SA + m;
    for (I i = m - 1; i >= 0; --i) {
        if (SA[i] >= 0) {
            const I j = i;
            do {
                isa[SA[i]] = i;
            } while (--i >= 0 && SA[i] >= 0);
            SA[i + 1] = i - j;
            if (i <= 0) break;
        }
        // A marked run closes with its unmarked head on the left.
        const I j = i;
        do {
            isa[SA[i] = ~SA[i]] = j;
        } while (SA[--i] < 0);
        isa[SA[i]] = j;
    }
}

template <IndexCell I>
bool doubling_pass(std::span<I> sa, I m, I h, const DoublingConfig& cfg) {
    I* SA = sa.data();
    const I* isa = SA + m;
    Doubler<I> dbl(sa, m, h, cfg);
    bool unsorted = false;
    I first = 0, skip = 0;
    // Sorted runs are kept as one negative length at their leftmost cell;
    // adjacent runs are merged as the scan passes over them.
    while (first < m) {
        const I t = SA[first];
        if (t < 0) {
            first -= t;
            skip += t;
            continue;
        }
        if (skip != 0) {
            SA[first + skip] = skip;
            skip = 0;
        }
        const I last = isa[t] + 1;
        if (last - first > 1) {
            if (dbl.sort_group(first, last))
                skip = first - last;
            else
                unsorted = true;
        } else if (last - first == 1) {
            skip = -1;
        }
        first = last;
    }
    if (skip != 0) SA[first + skip] = skip;
    return unsorted;
}

template <IndexCell I>
void rank_bstar_suffixes(std::span<I> sa, I m, const DoublingConfig& cfg) {
    if (m <= 0) return;
    build_partial_isa(sa, m);
    for (I h = 1; sa[0] > -m; h *= 2)
        if (!doubling_pass(sa, m, h, cfg)) break;
}

template <IndexCell I>
void place_bstar_positions(Text text, std::span<I> sa, I m) {
    if (m <= 0) return;
    const I n = static_cast<I>(text.size());
    const I* isa = sa.data() + m;
    I j = m;
    int c0 = text[n - 1], c1;
    for (I i = n - 1; i >= 0;) {
        for (--i, c1 = c0; i >= 0 && (c0 = text[i]) >= c1; --i, c1 = c0) {
        }
        if (i < 0) break;
        const I t = i;
        for (--i, c1 = c0; i >= 0 && (c0 = text[i]) <= c1; --i, c1 = c0) {
        }
        sa[isa[--j]] = (t == 0 || t - i > 1) ? t : ~t;
    }
}

template <IndexCell I>
void finalize_bstar_order(Text text, BucketTables<I>& bt, std::span<I> sa, I m) {
    if (m <= 0) return;
    place_bstar_positions(text, sa, m);
    distribute_bstar(bt, sa, static_cast<I>(text.size()), m, [](I, I) {});
}

#define DIVLCP_INSTANTIATE(I)                                                          \
    template void build_partial_isa<I>(std::span<I>, I);                               \
    template bool doubling_pass<I>(std::span<I>, I, I, const DoublingConfig&);         \
    template void rank_bstar_suffixes<I>(std::span<I>, I, const DoublingConfig&);      \
    template void place_bstar_positions<I>(Text, std::span<I>, I);                     \
    template void finalize_bstar_order<I>(Text, BucketTables<I>&, std::span<I>, I);

DIVLCP_INSTANTIATE(std::int32_t)
DIVLCP_INSTANTIATE(std::int64_t)

}  // namespace divlcp
