#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "divlcp/reference_oracles.hpp"

namespace fs = std::filesystem;
using namespace divlcp::cli;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("divlcp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& content) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }
    fs::path path(const std::string& name) const { return dir_ / name; }

    fs::path dir_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_F(CliTest, BuildThenVerifyRoundTrip) {
    const auto in = write("in.txt", "cdcdcdcdccdd$");
    for (int width : {32, 64}) {
        for (Format f : {Format::Raw, Format::Text}) {
            std::ostringstream err;
            BuildOptions b{in, path("sa"), path("lcp"), f, width, true};
            ASSERT_EQ(cmd_build(b, err), kOk) << err.str();
            EXPECT_EQ(read_ints(path("sa"), f, width),
                      (std::vector<std::int64_t>{12, 8, 6, 4, 2, 0, 9, 11, 7, 5, 3, 1, 10}));
            EXPECT_EQ(read_ints(path("lcp"), f, width),
                      (std::vector<std::int64_t>{0, 0, 1, 3, 5, 7, 2, 0, 1, 2, 4, 6, 1}));
            VerifyOptions v{in, path("sa"), path("lcp"), f, width};
            EXPECT_EQ(cmd_verify(v, err), kOk) << err.str();
        }
    }
}

TEST_F(CliTest, RawAndTextCarrySameValues) {
    const auto in = write("in.txt", "mississippi");
    std::ostringstream err;
    ASSERT_EQ(cmd_build({in, path("raw"), {}, Format::Raw, 32, false}, err), kOk);
    ASSERT_EQ(cmd_build({in, path("txt"), {}, Format::Text, 32, false}, err), kOk);
    EXPECT_EQ(fs::file_size(path("raw")), 11u * 4);
    EXPECT_EQ(read_ints(path("raw"), Format::Raw, 32), read_ints(path("txt"), Format::Text, 32));
    EXPECT_EQ(slurp(path("txt")).substr(0, 5), "10\n7\n");
}

TEST_F(CliTest, EmptyInput) {
    const auto in = write("empty", "");
    std::ostringstream err;
    ASSERT_EQ(cmd_build({in, path("sa"), path("lcp"), Format::Raw, 32, true}, err), kOk) << err.str();
    EXPECT_EQ(fs::file_size(path("sa")), 0u);
    EXPECT_EQ(fs::file_size(path("lcp")), 0u);
    EXPECT_EQ(cmd_verify({in, path("sa"), path("lcp"), Format::Raw, 32}, err), kOk);
}

TEST_F(CliTest, VerifyReportsFirstDivergence) {
    const auto in = write("in.txt", "cdcdcdcdccdd$");
    std::ostringstream err;
    ASSERT_EQ(cmd_build({in, path("sa"), path("lcp"), Format::Text, 32, false}, err), kOk);
    auto lcp = read_ints(path("lcp"), Format::Text, 32);
    lcp[4] = 9;
    write_ints(path("lcp"), lcp, Format::Text, 32);
    std::ostringstream err2;
    EXPECT_EQ(cmd_verify({in, path("sa"), path("lcp"), Format::Text, 32}, err2), kVerifyFailed);
    EXPECT_NE(err2.str().find("LCP mismatch at index 4: expected 5, actual 9"), std::string::npos)
        << err2.str();

    auto sa = read_ints(path("sa"), Format::Text, 32);
    std::swap(sa[1], sa[2]);
    write_ints(path("sa"), sa, Format::Text, 32);
    std::ostringstream err3;
    EXPECT_EQ(cmd_verify({in, path("sa"), {}, Format::Text, 32}, err3), kVerifyFailed);
}

TEST_F(CliTest, WidthOrLengthMismatchIsIoError) {
    const auto in = write("in.txt", "abracadabra");
    std::ostringstream err;
    ASSERT_EQ(cmd_build({in, path("sa"), {}, Format::Raw, 64, false}, err), kOk);
    EXPECT_EQ(cmd_verify({in, path("sa"), {}, Format::Raw, 32}, err), kIoError);
    const auto shorter = write("short.txt", "abracadab");
    EXPECT_EQ(cmd_verify({shorter, path("sa"), {}, Format::Raw, 64}, err), kIoError);
}

TEST_F(CliTest, MissingInputIsIoError) {
    std::ostringstream err;
    EXPECT_EQ(cmd_build({path("nope"), path("sa"), {}, Format::Raw, 32, false}, err), kIoError);
    EXPECT_FALSE(err.str().empty());
}

TEST_F(CliTest, BenchCsv) {
    const auto in = write("in.txt", "abracadabra abracadabra");
    BenchOptions o;
    o.input = in;
    o.iters = 3;
    o.algos = {"induce-sa", "kasai"};
    std::ostringstream out, err;
    ASSERT_EQ(cmd_bench(o, out, err), kOk) << err.str();
    std::istringstream rows(out.str());
    std::string line;
    std::getline(rows, line);
    EXPECT_EQ(line, "algo,n,iteration,seconds");
    int iter_rows = 0, mean_rows = 0;
    while (std::getline(rows, line)) {
        if (line.find(",mean,") != std::string::npos) ++mean_rows;
        else ++iter_rows;
        EXPECT_EQ(line.find(",23,"), line.find(','));
    }
    EXPECT_EQ(iter_rows, 6);
    EXPECT_EQ(mean_rows, 2);

    o.algos = {"bogus"};
    EXPECT_EQ(cmd_bench(o, out, err), kIoError);
}
