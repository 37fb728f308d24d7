#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "phsq/cli.hpp"
#include "phsq/io.hpp"
#include "phsq/synthetic.hpp"

using namespace phsq;

namespace {

int run(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
    args.insert(args.begin(), "phsq");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());

    std::ostringstream captured_out, captured_err;
    std::streambuf* old_out = std::cout.rdbuf(captured_out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(captured_err.rdbuf());
    int code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);

    if (out) *out = captured_out.str();
    if (err) *err = captured_err.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("cli computes the worked example") {
    std::string flt = write_temp("phsq_cli_rp2.flt", emit_complex(rp2_complex()));
    std::string coc = write_temp("phsq_cli_rp2_cocycle.txt", emit_cochain(rp2_cocycle()));

    std::string out;
    CHECK(run({"stsq", flt, coc, "-k", "1"}, &out) == 0);
    CHECK(out == "2 3 5\n");

    CHECK(run({"rankinv", flt, "-k", "1", "-d", "1", "-i", "31", "-j", "31"}, &out) == 0);
    CHECK(out == "1\n");

    CHECK(run({"rankinv", flt, "-k", "1", "-d", "1", "-i", "-inf", "-j", "5"}, &out) == 0);
    CHECK(out == "0\n");

    CHECK(run({"stsq", flt, coc, "-k", "1", "--json"}, &out) == 0);
    CHECK(out.find("\"degree\": 2") != std::string::npos);
}

TEST_CASE("cli json barcode of a point") {
    std::string flt = write_temp("phsq_cli_point.flt", "1\n");
    std::string out;
    CHECK(run({"barcode", flt, "--json"}, &out) == 0);
    CHECK(out.find("\"left\": \"-inf\"") != std::string::npos);
    CHECK(out.find("\"right\": 1") != std::string::npos);
}

TEST_CASE("cli exit codes distinguish input errors") {
    std::string err;
    CHECK(run({"barcode", "/nonexistent/nowhere.flt"}, nullptr, &err) == 1);
    CHECK(err.find("error[parse_error]") != std::string::npos);

    std::string bad = write_temp("phsq_cli_bad.flt", "1 2\n");
    CHECK(run({"barcode", bad}, nullptr, &err) == 1);
    CHECK(err.find("error[not_closed]") != std::string::npos);

    std::string empty_cochain = write_temp("phsq_cli_empty.txt", "# nothing\n");
    std::string flt = write_temp("phsq_cli_edge.flt", "1\n2\n1 2\n");
    CHECK(run({"stsq", flt, empty_cochain, "-k", "1"}, nullptr, &err) == 1);
    CHECK(err.find("error[missing_degree]") != std::string::npos);
    std::string out;
    CHECK(run({"stsq", flt, empty_cochain, "-k", "1", "--degree", "1"}, &out) == 0);
    CHECK(out.empty());

    CHECK(run({"stsq", flt}, nullptr, &err) == 1);  // missing arguments
}

TEST_CASE("cli rips to barcode pipeline") {
    std::string pts = write_temp("phsq_cli_square.csv", "x,y\n0,0\n1,0\n0,1\n1,1\n");
    auto out_path = std::filesystem::temp_directory_path() / "phsq_cli_square.flt";
    std::string out;
    CHECK(run({"rips", pts, "--threshold", "1.2", "--max-dim", "2", "--out", out_path.string()}) ==
          0);
    CHECK(run({"barcode", out_path.string()}, &out) == 0);
    // four corners at threshold 1.2: a circle, so one essential bar per degree 0 and 1
    CHECK(out.find("0 -inf 8 1") != std::string::npos);
    CHECK(out.find("1 7 8 1") != std::string::npos);
}
