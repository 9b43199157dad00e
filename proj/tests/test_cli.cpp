#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LINKLAB_CLI_PATH
#define LINKLAB_CLI_PATH "linklab"
#endif

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const char* tag) {
    static int counter = 0;
    const fs::path dir =
        fs::temp_directory_path() / ("linklab_cli_" + std::string(tag) + "_" +
                                     std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const fs::path dir = fresh_dir("io");
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    const std::string cmd = env_prefix + std::string(LINKLAB_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    fs::remove_all(dir);
    return r;
}

}  // namespace

TEST_CASE("cli: sweep writes the documented csv") {
    const fs::path out = fresh_dir("sweep");
    const CmdResult r = run_cli("sweep --channel flat --snr-list 8,16 --bits-per-point 100000 "
                                "--seed 42 --out " + out.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out / "sweep.csv");
    CHECK(csv.rfind("snr_db,ber,snr_est_mean,missed_frac\n", 0) == 0);
    // header + 2 data rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    fs::remove_all(out);
}

TEST_CASE("cli: identical seeds give byte-identical csv outputs") {
    const fs::path out1 = fresh_dir("det1");
    const fs::path out2 = fresh_dir("det2");
    const std::string args = "sweep --channel flat --snr-list 6,10 --bits-per-point 100000 "
                             "--seed 7 --out ";
    CHECK(run_cli(args + out1.string()).exit_code == 0);
    CHECK(run_cli(args + out2.string() + " --threads 2").exit_code == 0);
    CHECK(slurp(out1 / "sweep.csv") == slurp(out2 / "sweep.csv"));
    fs::remove_all(out1);
    fs::remove_all(out2);
}

TEST_CASE("cli: link summary and block history") {
    const fs::path out = fresh_dir("link");
    const CmdResult r = run_cli("link --channel paper-fir --snr 16 --bits 100000 --out " +
                                out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ber:") != std::string::npos);
    CHECK(r.out.find("snr_estimated_mean:") != std::string::npos);
    const std::string csv = slurp(out / "ber_blocks.csv");
    CHECK(csv.rfind("block_index,ber\n", 0) == 0);
    fs::remove_all(out);
}

TEST_CASE("cli: chanest reports the max bin error") {
    const fs::path out = fresh_dir("chanest");
    const CmdResult r = run_cli("chanest --channel paper-fir --snr noiseless --frames 1 --out " +
                                out.string());
    CHECK(r.exit_code == 0);
    const auto pos = r.out.find("max bin error: ");
    REQUIRE(pos != std::string::npos);
    const double err = std::stod(r.out.substr(pos + 15));
    CHECK(err < 1e-6);
    const std::string csv = slurp(out / "chanest.csv");
    CHECK(csv.rfind("bin,true_re,true_im,est_re,est_im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 49);  // header + 48 bins
    fs::remove_all(out);
}

TEST_CASE("cli: config file plus flag override") {
    const fs::path out = fresh_dir("cfg");
    const fs::path conf = out / "run.conf";
    {
        std::ofstream f(conf);
        f << "# test configuration\n"
          << "channel = flat\n"
          << "snr_list = 8\n"
          << "n_bits_per_point = 100000\n"
          << "seed = 5\n";
    }
    const CmdResult a =
        run_cli("sweep --config " + conf.string() + " --out " + out.string());
    CHECK(a.exit_code == 0);
    const std::string first = slurp(out / "sweep.csv");
    // flag overrides the file seed, changing the noise realization
    const CmdResult b = run_cli("sweep --config " + conf.string() + " --seed 6 --out " +
                                out.string());
    CHECK(b.exit_code == 0);
    CHECK(slurp(out / "sweep.csv") != first);
    fs::remove_all(out);
}

TEST_CASE("cli: LINKLAB_SEED is the lowest-precedence seed source") {
    const fs::path out1 = fresh_dir("env1");
    const fs::path out2 = fresh_dir("env2");
    const std::string args = "sweep --channel flat --snr-list 8 --bits-per-point 100000 --out ";
    CHECK(run_cli(args + out1.string(), "LINKLAB_SEED=123 ").exit_code == 0);
    CHECK(run_cli(args + out2.string() + " --seed 123").exit_code == 0);
    CHECK(slurp(out1 / "sweep.csv") == slurp(out2 / "sweep.csv"));
    // flag wins over the environment
    CHECK(run_cli(args + out1.string() + " --seed 9", "LINKLAB_SEED=123 ").exit_code == 0);
    CHECK(slurp(out1 / "sweep.csv") != slurp(out2 / "sweep.csv"));
    fs::remove_all(out1);
    fs::remove_all(out2);
}

TEST_CASE("cli: configuration errors exit 2 and name the key") {
    const CmdResult r = run_cli("link --n-occ 47 --bits 100000");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("n_occ") != std::string::npos);

    const CmdResult unknown = run_cli("sweep --snr-list bogus");
    CHECK(unknown.exit_code == 2);

    const CmdResult noargs = run_cli("");
    CHECK(noargs.exit_code == 2);
}

TEST_CASE("cli: unwritable output directory exits 2 with no partial files") {
    const fs::path out = fresh_dir("unwritable");
    const fs::path not_a_dir = out / "file.txt";
    std::ofstream(not_a_dir) << "occupied\n";
    const CmdResult r = run_cli("sweep --channel flat --snr-list 8 --bits-per-point 100000 "
                                "--out " + not_a_dir.string());
    CHECK(r.exit_code == 2);
    CHECK(!fs::exists(not_a_dir.string() + "/sweep.csv"));
    // the directory contains only the original file
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(out)) ++entries;
    CHECK(entries == 1);
    fs::remove_all(out);
}

TEST_CASE("cli: write failures exit 3") {
    const fs::path out = fresh_dir("wfail");
    fs::create_directories(out / "sweep.csv");  // blocks the output file
    const CmdResult r = run_cli("sweep --channel flat --snr-list 8 --bits-per-point 100000 "
                                "--out " + out.string());
    CHECK(r.exit_code == 3);
    fs::remove_all(out);
}

TEST_CASE("cli: help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("sweep --help").exit_code == 0);
}
