#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "io.hpp"

namespace divlcp::cli {

enum Exit : int { kOk = 0, kIoError = 1, kCapacity = 2, kVerifyFailed = 3 };

struct BuildOptions {
    std::filesystem::path input;
    std::filesystem::path sa;
    std::filesystem::path lcp;  // empty: no LCP output
    Format format = Format::Raw;
    int width = 32;
    bool verify = false;
};

struct VerifyOptions {
    std::filesystem::path input;
    std::filesystem::path sa;
    std::filesystem::path lcp;  // empty: SA only
    Format format = Format::Raw;
    int width = 32;
};

struct BenchOptions {
    std::filesystem::path input;
    int iters = 21;
    std::vector<std::string> algos{"induce-sa", "induce-sa-lcp", "phi"};
    int width = 32;
};

inline const std::vector<std::string> kBenchAlgos{"induce-sa", "induce-sa-lcp", "naive-lcp", "kasai",
                                                  "phi"};

// Each returns a process exit code; diagnostics go to err.
int cmd_build(const BuildOptions& o, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& err);
// CSV rows algo,n,iteration,seconds on out, plus one row per algo with
// iteration "mean".
int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err);

}  // namespace divlcp::cli
