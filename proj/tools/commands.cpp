#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>

#include "divlcp/lcp_induce.hpp"
#include "divlcp/reference_oracles.hpp"

namespace divlcp::cli {

namespace {

template <IndexCell I>
int build_as(const BuildOptions& o, const std::vector<std::uint8_t>& bytes, std::ostream& err) {
    const Text text(bytes.data(), bytes.size());
    std::vector<I> sa(bytes.size()), lcp;
    try {
        if (o.lcp.empty()) {
            build_sa<I>(text, sa);
        } else {
            lcp.resize(bytes.size());
            build_sa_lcp<I>(text, sa, lcp);
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "; try --index-width 64\n";
        return kCapacity;
    }
    if (o.verify) {
        if (!oracle::verify_sa<I>(text, sa)) {
            err << "verification failed: suffix array is not sorted\n";
            return kVerifyFailed;
        }
        if (!o.lcp.empty()) {
            const auto naive = oracle::naive_lcp<I>(text, sa);
            if (naive != oracle::kasai_lcp<I>(text, sa) || naive != oracle::phi_lcp<I>(text, sa) ||
                naive != lcp) {
                err << "verification failed: LCP disagrees with the reference implementations\n";
                return kVerifyFailed;
            }
        }
    }
    write_ints(o.sa, sa, o.format, o.width);
    if (!o.lcp.empty()) write_ints(o.lcp, lcp, o.format, o.width);
    return kOk;
}

template <class A, class B>
bool report_divergence(const char* what, const A& expected, const B& actual, std::ostream& err) {
    const std::size_t n = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<std::int64_t>(expected[i]) != static_cast<std::int64_t>(actual[i])) {
            err << what << " mismatch at index " << i << ": expected " << expected[i] << ", actual "
                << actual[i] << '\n';
            return true;
        }
    }
    return false;
}

template <IndexCell I>
int verify_as(const VerifyOptions& o, const std::vector<std::uint8_t>& bytes,
              const std::vector<std::int64_t>& sa_raw, const std::vector<std::int64_t>& lcp_raw,
              std::ostream& err) {
    const Text text(bytes.data(), bytes.size());
    const std::size_t n = bytes.size();
    std::vector<I> sa(n);
    for (std::size_t i = 0; i < n; ++i)
        sa[i] = sa_raw[i] < 0 || static_cast<std::uint64_t>(sa_raw[i]) >= n ? I(-1) : static_cast<I>(sa_raw[i]);
    if (!oracle::verify_sa<I>(text, sa)) {
        const std::vector<I> expected = build_sa<I>(text);
        if (!report_divergence("SA", expected, sa_raw, err))
            err << "SA mismatch: not a sorted permutation\n";
        return kVerifyFailed;
    }
    if (!o.lcp.empty()) {
        const std::vector<I> expected = oracle::kasai_lcp<I>(text, sa);
        if (report_divergence("LCP", expected, lcp_raw, err)) return kVerifyFailed;
    }
    return kOk;
}

double seconds_of(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <IndexCell I>
int bench_as(const BenchOptions& o, const std::vector<std::uint8_t>& bytes, std::ostream& out,
             std::ostream& err) {
    const Text text(bytes.data(), bytes.size());
    const std::size_t n = bytes.size();
    std::vector<I> sa;
    try {
        sa = build_sa<I>(text);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    }
    // The LCP-only algorithms get the suffix array for free, as prerequisite.
    std::vector<I> scratch(n), lcp(n);
    out << "algo,n,iteration,seconds\n";
    for (const std::string& algo : o.algos) {
        std::function<void()> run;
        if (algo == "induce-sa")
            run = [&] { build_sa<I>(text, scratch); };
        else if (algo == "induce-sa-lcp")
            run = [&] { build_sa_lcp<I>(text, scratch, lcp); };
        else if (algo == "naive-lcp")
            run = [&] { lcp = oracle::naive_lcp<I>(text, sa); };
        else if (algo == "kasai")
            run = [&] { lcp = oracle::kasai_lcp<I>(text, sa); };
        else
            run = [&] { lcp = oracle::phi_lcp<I>(text, sa); };
        double total = 0;
        for (int it = 0; it < o.iters; ++it) {
            const double s = seconds_of(run);
            total += s;
            out << algo << ',' << n << ',' << it << ',' << s << '\n';
        }
        out << algo << ',' << n << ",mean," << total / o.iters << '\n';
    }
    return kOk;
}

}  // namespace

int cmd_build(const BuildOptions& o, std::ostream& err) {
    try {
        const auto bytes = read_bytes(o.input);
        return o.width == 64 ? build_as<std::int64_t>(o, bytes, err) : build_as<std::int32_t>(o, bytes, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

int cmd_verify(const VerifyOptions& o, std::ostream& err) {
    try {
        const auto bytes = read_bytes(o.input);
        const auto sa = read_ints(o.sa, o.format, o.width);
        std::vector<std::int64_t> lcp;
        if (!o.lcp.empty()) lcp = read_ints(o.lcp, o.format, o.width);
        if (sa.size() != bytes.size() || (!o.lcp.empty() && lcp.size() != bytes.size())) {
            err << "error: expected " << bytes.size() << " values per array at " << o.width
                << "-bit width, got SA " << sa.size();
            if (!o.lcp.empty()) err << ", LCP " << lcp.size();
            err << '\n';
            return kIoError;
        }
        return o.width == 64 ? verify_as<std::int64_t>(o, bytes, sa, lcp, err)
                             : verify_as<std::int32_t>(o, bytes, sa, lcp, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    }
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
    for (const std::string& a : o.algos) {
        if (std::find(kBenchAlgos.begin(), kBenchAlgos.end(), a) == kBenchAlgos.end()) {
            err << "error: unknown algorithm '" << a << "'\n";
            return kIoError;
        }
    }
    if (o.iters < 1) {
        err << "error: --iters must be at least 1\n";
        return kIoError;
    }
    try {
        const auto bytes = read_bytes(o.input);
        return o.width == 64 ? bench_as<std::int64_t>(o, bytes, out, err)
                             : bench_as<std::int32_t>(o, bytes, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace divlcp::cli
