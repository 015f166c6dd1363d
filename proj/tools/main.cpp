#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace divlcp::cli;

int main(int argc, char** argv) {
    CLI::App app{"Suffix array and LCP array construction"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"raw", Format::Raw}, {"text", Format::Text}};
    auto width_check = CLI::IsMember({32, 64});

    BuildOptions b;
    auto* build = app.add_subcommand("build", "Construct SA (and LCP) for a file");
    build->add_option("input", b.input, "Input text")->required();
    build->add_option("--sa", b.sa, "Suffix array output path")->required();
    build->add_option("--lcp", b.lcp, "LCP array output path");
    build->add_option("--format", b.format, "raw or text")->transform(CLI::CheckedTransformer(formats));
    build->add_option("--index-width", b.width, "32 or 64")->check(width_check);
    build->add_flag("--verify", b.verify, "Check the result against the reference implementations");

    VerifyOptions v;
    auto* verify = app.add_subcommand("verify", "Check SA (and LCP) files against a text");
    verify->add_option("input", v.input, "Input text")->required();
    verify->add_option("--sa", v.sa, "Suffix array file")->required();
    verify->add_option("--lcp", v.lcp, "LCP array file");
    verify->add_option("--format", v.format, "raw or text")->transform(CLI::CheckedTransformer(formats));
    verify->add_option("--index-width", v.width, "32 or 64")->check(width_check);

    BenchOptions k;
    auto* bench = app.add_subcommand("bench", "Time construction algorithms, CSV on stdout");
    bench->add_option("input", k.input, "Input text")->required();
    bench->add_option("--iters", k.iters, "Iterations per algorithm")->check(CLI::PositiveNumber);
    bench->add_option("--algo", k.algos, "Comma separated: induce-sa, induce-sa-lcp, naive-lcp, kasai, phi")
        ->delimiter(',');
    bench->add_option("--index-width", k.width, "32 or 64")->check(width_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kIoError;
    }

    if (*build) return cmd_build(b, std::cerr);
    if (*verify) return cmd_verify(v, std::cerr);
    return cmd_bench(k, std::cout, std::cerr);
}
