#pragma once

#include <cstddef>
#include <vector>

namespace divlcp {

enum class ScanDirection { RightToLeft, LeftToRight };

// Range minimum over LCP cells seen so far in one directional scan. Keeps
// only the cells that are smaller than everything pushed after them, so the
// values strictly increase from bottom to top. One array plus a top index;
// the bottom cell is a sentinel that is never popped.
template <class I>
class MinStack {
public:
    struct Entry {
        I pos;
        I value;
    };

    MinStack(ScanDirection dir, I n) : dir_(dir), s_(64) {
        s_[0] = dir == ScanDirection::RightToLeft ? Entry{n, I(-1)} : Entry{I(-1), I(-1)};
    }

    void reset() { top_ = 0; }

    void update(I pos, I value) {
        while (s_[top_].value >= value) --top_;
        if (++top_ == s_.size()) s_.resize(2 * s_.size());
        s_[top_] = {pos, value};
    }

    // Minimum over every pushed cell from the scan front back to j, i.e.
    // [front, j] scanning right to left and [j, front] left to right. At
    // least one cell must have been pushed on that side of j. The answer is
    // the deepest entry not past j; gallop down from the top, then bisect.
    I rmq(I j) const {
        const bool rtl = dir_ == ScanDirection::RightToLeft;
        auto within = [&](std::size_t k) { return rtl ? s_[k].pos <= j : s_[k].pos >= j; };
        std::size_t good = top_, step = 1;
        std::size_t bad = 0;
        while (good > step) {
            const std::size_t k = good - step;
            if (!within(k)) {
                bad = k;
                break;
            }
            good = k;
            step *= 2;
        }
        // within(good) holds, within(bad) does not (or bad is the sentinel)
        while (good - bad > 1) {
            const std::size_t mid = bad + (good - bad) / 2;
            if (within(mid)) good = mid; else bad = mid;
        }
        return s_[good].value;
    }

    std::size_t size() const { return top_; }
    const Entry& operator[](std::size_t k) const { return s_[k + 1]; }

private:
    ScanDirection dir_;
    std::vector<Entry> s_;
    std::size_t top_ = 0;
};

}  // namespace divlcp
