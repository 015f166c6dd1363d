// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
//
//   acceptance [--corpus PATH] [--runs N]
//
// --corpus replaces the synthetic 20 MB text of the performance criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "divlcp/divlcp.hpp"

using namespace divlcp;
using divlcp::testing::as_text;
using divlcp::testing::kRunning;
using I = std::int32_t;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

int report(Criterion& c) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail.str() << std::endl;
    return c.ok ? 0 : 1;
}

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

std::vector<I> slice(const std::vector<I>& v, std::size_t b, std::size_t e) {
    return {v.begin() + static_cast<std::ptrdiff_t>(b), v.begin() + static_cast<std::ptrdiff_t>(e)};
}

void golden(Criterion& c) {
    const Text t = as_text(kRunning);
    using ST = SuffixType;
    c.expect(classify(t) == std::vector<ST>{ST::BStar, ST::A, ST::BStar, ST::A, ST::BStar, ST::A,
                                            ST::BStar, ST::A, ST::B, ST::BStar, ST::A, ST::A, ST::A},
             "types");

    BucketTables<I> bt;
    std::vector<I> sa(t.size());
    const I m = count_buckets<I>(t, bt, sa);
    c.expect(m == 5, "m");
    c.expect(bt.A('$') == 1 && bt.A('c') == 0 && bt.A('d') == 6, "A counts");
    c.expect(bt.B('c', 'c') == 1 && bt.BStar('c', 'd') == 5, "B counts");
    c.expect(slice(sa, 8, 13) == std::vector<I>{0, 2, 4, 6, 9}, "PAb");
    prefix_sums(bt);
    c.expect(bt.A('$') == 0 && bt.A('c') == 1 && bt.A('d') == 7, "bucket starts");
    build_bstar_references<I>(t, bt, sa, m);
    c.expect(slice(sa, 0, 5) == std::vector<I>{4, 0, 1, 2, 3}, "references");

    sort_all_bstar_substrings<I>(t, bt, sa, m);
    c.expect(slice(sa, 0, 5) == std::vector<I>{3, 0, ~1, ~2, 4}, "sorted references");
    build_partial_isa<I>(sa, m);
    c.expect(slice(sa, 0, 5) == std::vector<I>{-1, 0, 1, 2, -1}, "partial ISA marks");
    c.expect(slice(sa, 5, 10) == std::vector<I>{3, 3, 3, 0, 4}, "partial ISA");
    for (I h = 1; sa[0] > -m; h *= 2)
        if (!doubling_pass<I>(sa, m, h)) break;
    c.expect(slice(sa, 5, 10) == std::vector<I>{3, 2, 1, 0, 4}, "final ranks");
    finalize_bstar_order<I>(t, bt, sa, m);
    c.expect(sa == std::vector<I>{~6, ~4, ~6, ~4, ~2, 0, 9, 1, 0, 4, 4, 6, 9}, "distribution");

    induce_b_suffixes<I>(t, bt, sa, m);
    c.expect(sa == std::vector<I>{~6, 8, 6, 4, 2, ~0, ~9, 1, 0, 4, 4, 6, 9}, "after B scan");
    seed_last_suffix<I>(t, bt, sa);
    c.expect(sa[0] == 12, "seed");
    induce_a_suffixes<I>(t, bt, sa);
    const std::vector<I> want_sa{12, 8, 6, 4, 2, 0, 9, 11, 7, 5, 3, 1, 10};
    c.expect(sa == want_sa, "final SA");
    c.expect(build_sa<I>(t) == want_sa, "build_sa");
    const auto r = build_sa_lcp<I>(t);
    c.expect(r.sa == want_sa, "build_sa_lcp SA");
    c.expect(r.lcp == std::vector<I>{0, 0, 1, 3, 5, 7, 2, 0, 1, 2, 4, 6, 1}, "build_sa_lcp LCP");
    c.detail << "running example matches every stage";
}

// Exhaustive small corpora plus random byte texts.
void for_each_corpus_text(const std::function<void(const std::string&)>& f) {
    divlcp::testing::for_each_string("ab", 12, f);
    divlcp::testing::for_each_string("abc", 8, f);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t len = rng() % 10001;
        const int sigma = 1 + static_cast<int>(rng() % 256);
        f(divlcp::testing::random_text(rng, len, sigma, 0));
    }
}

void oracle_equivalence(Criterion& c) {
    std::size_t texts = 0;
    for_each_corpus_text([&](const std::string& s) {
        ++texts;
        if (!c.ok) return;
        const auto r = build_sa_lcp<I>(as_text(s));
        const auto sa = oracle::naive_sa<I>(as_text(s));
        c.expect(r.sa == sa, "SA of text #" + std::to_string(texts));
        c.expect(r.lcp == oracle::naive_lcp<I>(as_text(s), sa), "LCP of text #" + std::to_string(texts));
    });
    c.detail << texts << " texts";
}

void lcp_triangle(Criterion& c) {
    std::size_t texts = 0;
    for_each_corpus_text([&](const std::string& s) {
        ++texts;
        if (!c.ok) return;
        const auto sa = oracle::naive_sa<I>(as_text(s));
        const auto a = oracle::naive_lcp<I>(as_text(s), sa);
        c.expect(a == oracle::kasai_lcp<I>(as_text(s), sa), "kasai on text #" + std::to_string(texts));
        c.expect(a == oracle::phi_lcp<I>(as_text(s), sa), "phi on text #" + std::to_string(texts));
    });
    c.detail << texts << " texts";
}

void min_stack(Criterion& c) {
    std::mt19937_64 rng(77);
    std::size_t queries = 0;
    for (int w = 0; w < 10000 && c.ok; ++w) {
        const int n = 1 + static_cast<int>(rng() % 200);
        const int vmax = 1 + static_cast<int>(rng() % 50);
        const bool rtl = rng() % 2;
        std::vector<I> a(n);
        for (I& v : a) v = static_cast<I>(rng() % vmax);
        MinStack<I> st(rtl ? ScanDirection::RightToLeft : ScanDirection::LeftToRight, n);
        for (int step = 0; step < n; ++step) {
            const int i = rtl ? n - 1 - step : step;
            st.update(i, a[i]);
            for (int q = 0; q < 3; ++q) {
                const int j = rtl ? i + static_cast<int>(rng() % (n - i)) : static_cast<int>(rng() % (i + 1));
                const int lo = std::min(i, j), hi = std::max(i, j);
                ++queries;
                c.expect(st.rmq(j) == *std::min_element(a.begin() + lo, a.begin() + hi + 1),
                         "workload " + std::to_string(w));
            }
        }
    }
    c.detail << "10000 workloads, " << queries << " queries";
}

void repetition_neutrality(Criterion& c) {
    std::size_t texts = 0;
    std::vector<std::string> blocks;
    for (int p = 1; p <= 3; ++p)
        divlcp::testing::for_each_string("abc", p, [&](const std::string& b) {
            if (static_cast<int>(b.size()) == p) blocks.push_back(b);
        });
    for (const auto& b : blocks)
        for (int r = 1; r <= 50; ++r)
            for (const std::string tail : {"", "a", "b", "c", "ab", "ca"})
                for (const std::string head : {"", "c", "ba"}) {
                    const std::string s = head + divlcp::testing::repetition(b, r, tail);
                    BuildConfig on, off;
                    off.doubling.detect_repetitions = false;
                    const auto x = build_sa_lcp<I>(as_text(s), on);
                    const auto y = build_sa_lcp<I>(as_text(s), off);
                    ++texts;
                    c.expect(x.sa == y.sa && x.lcp == y.lcp, "text " + s);
                }
    c.detail << texts << " periodic texts";
}

// Natural-language-like bytes: Zipf-distributed words from a random
// vocabulary, with punctuation and line breaks.
std::vector<std::uint8_t> synthetic_text(std::size_t n) {
    std::mt19937_64 rng(20);
    const std::size_t vocab = 60000;
    std::vector<std::string> words(vocab);
    std::uniform_int_distribution<int> letter('a', 'z');
    for (auto& w : words) {
        const int len = 1 + static_cast<int>(rng() % 4) + static_cast<int>(rng() % 6);
        for (int k = 0; k < len; ++k) w += static_cast<char>(letter(rng));
    }
    std::vector<double> weight(vocab);
    for (std::size_t k = 0; k < vocab; ++k) weight[k] = 1.0 / static_cast<double>(k + 1);
    std::discrete_distribution<std::size_t> pick(weight.begin(), weight.end());
    std::vector<std::uint8_t> out;
    out.reserve(n + 16);
    while (out.size() < n) {
        const auto& w = words[pick(rng)];
        out.insert(out.end(), w.begin(), w.end());
        const auto r = rng() % 20;
        out.push_back(r == 0 ? '\n' : r == 1 ? ',' : ' ');
    }
    out.resize(n);
    return out;
}

void performance(Criterion& c, const std::string& corpus, int runs) {
    std::vector<std::uint8_t> bytes;
    if (corpus.empty()) {
        bytes = synthetic_text(20u << 20);
    } else {
        std::ifstream in(corpus, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
        c.expect(!bytes.empty(), "cannot read " + corpus);
        if (bytes.empty()) return;
    }
    const Text t(bytes.data(), bytes.size());
    std::vector<double> sa_only, sa_lcp, phi;
    std::vector<I> sa;
    for (int r = 0; r < runs; ++r) {
        sa_only.push_back(seconds([&] { sa = build_sa<I>(t); }));
        SaLcp<I> both;
        sa_lcp.push_back(seconds([&] { both = build_sa_lcp<I>(t); }));
        if (r == 0) c.expect(both.sa == sa, "SA differs between builders");
        std::vector<I> lcp;
        phi.push_back(seconds([&] { lcp = oracle::phi_lcp<I>(t, sa); }));
        if (r == 0) c.expect(lcp == both.lcp, "LCP differs from phi");
    }
    const double induced = mean(sa_lcp) - mean(sa_only);
    const double ratio = induced / mean(phi);
    c.expect(ratio <= 2.0, "ratio above 2.0");
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "n=%zu runs=%d sa=%.3fs sa+lcp=%.3fs lcp-part=%.3fs phi=%.3fs ratio=%.2f (gate 2.0)",
                  bytes.size(), runs, mean(sa_only), mean(sa_lcp), induced, mean(phi), ratio);
    c.detail << buf;
}

void scaling(Criterion& c) {
    std::mt19937_64 rng(8);
    const auto big = divlcp::testing::random_text(rng, 8u << 20, 256, 0);
    std::vector<double> times;
    for (std::size_t mb : {1, 2, 4, 8}) {
        const Text t(reinterpret_cast<const std::uint8_t*>(big.data()), mb << 20);
        std::vector<double> runs;
        for (int r = 0; r < 5; ++r) runs.push_back(seconds([&] { (void)build_sa_lcp<I>(t); }));
        times.push_back(median(runs));
    }
    char buf[128];
    for (std::size_t k = 0; k < times.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zuMB=%.3fs ", std::size_t{1} << k, times[k]);
        c.detail << buf;
    }
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double ratio = times[k] / times[k - 1];
        std::snprintf(buf, sizeof buf, "x%.2f ", ratio);
        c.detail << buf;
        c.expect(ratio <= 2.6, "doubling ratio above 2.6");
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string corpus;
    int runs = 21;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--corpus" && i + 1 < argc) corpus = argv[++i];
        else if (a == "--runs" && i + 1 < argc) runs = std::max(1, std::stoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--corpus PATH] [--runs N]\n";
            return 2;
        }
    }
    int failed = 0;
    Criterion c1{"golden running example"};
    golden(c1);
    failed += report(c1);
    Criterion c2{"oracle equivalence"};
    oracle_equivalence(c2);
    failed += report(c2);
    Criterion c3{"LCP oracle triangle"};
    lcp_triangle(c3);
    failed += report(c3);
    Criterion c4{"min-stack shadowing"};
    min_stack(c4);
    failed += report(c4);
    Criterion c5{"repetition detection neutrality"};
    repetition_neutrality(c5);
    failed += report(c5);
    Criterion c6{"LCP induction overhead vs phi"};
    performance(c6, corpus, runs);
    failed += report(c6);
    Criterion c7{"scaling on random text"};
    scaling(c7);
    failed += report(c7);
    return failed == 0 ? 0 : 1;
}
