// End-to-end driver for the listnet binary. Usage: test_cli <path-to-listnet>
// Spawns the real executable, checks exit codes, artifacts and output text.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "listnet/letor.hpp"
#include "listnet/report_io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

#define CLI_CHECK(cond, what)                                                       \
    do {                                                                            \
        if (!(cond)) {                                                              \
            ++failures;                                                             \
            std::cerr << "FAIL " << what << " (line " << __LINE__ << ")\n";         \
        }                                                                           \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path g_tmp;
std::string g_binary;

RunResult run(const std::string& args) {
    const fs::path out_file = g_tmp / "stdout.txt";
    const fs::path err_file = g_tmp / "stderr.txt";
    const std::string command =
        g_binary + " " + args + " > " + out_file.string() + " 2> " + err_file.string();
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

double parse_reported(const std::string& text, const std::string& key) {
    const std::size_t at = text.find(key);
    if (at == std::string::npos) return -1.0;
    return std::atof(text.c_str() + at + key.size());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-listnet>\n";
        return 2;
    }
    g_binary = argv[1];
    unsetenv("LISTNET_SEED");
    unsetenv("LISTNET_KERNEL");
    g_tmp = fs::temp_directory_path() / ("listnet_cli_test_" + std::to_string(getpid()));
    fs::create_directories(g_tmp);

    const std::string data = (g_tmp / "data.txt").string();
    const std::string wide = (g_tmp / "wide.txt").string();

    // --- synth ------------------------------------------------------------
    {
        RunResult r = run("synth --queries 30 --docs 8 --dim 4 --seed 11 --out " + data);
        CLI_CHECK(r.exit_code == 0, "synth exits 0");
        CLI_CHECK(fs::exists(data), "synth writes the file");

        const std::string again = (g_tmp / "data2.txt").string();
        run("synth --queries 30 --docs 8 --dim 4 --seed 11 --out " + again);
        CLI_CHECK(slurp(data) == slurp(again), "synth is seed-deterministic");

        const listnet::Dataset parsed = listnet::load_letor_file(data);
        CLI_CHECK(parsed.queries.size() == 30, "synth output parses back to 30 queries");
        CLI_CHECK(parsed.dim == 4, "synth output has the requested dimension");

        run("synth --queries 4 --docs 40 --dim 5 --seed 2 --out " + wide);
    }

    // --- train happy path ---------------------------------------------------
    const fs::path run_a = g_tmp / "run_a";
    {
        RunResult r = run("train --data " + data +
                          " --k 2 --mode stochastic --sampler adaptive --lists 20 --eta 1e-4" +
                          " --iters 8 --seed 7 --out-dir " + run_a.string());
        CLI_CHECK(r.exit_code == 0, "train exits 0");
        CLI_CHECK(fs::exists(run_a / "model.txt"), "train writes model.txt");
        CLI_CHECK(fs::exists(run_a / "train_report.csv"), "train writes train_report.csv");
        CLI_CHECK(fs::exists(run_a / "train_report.txt"), "train writes train_report.txt");
        CLI_CHECK(fs::exists(run_a / "manifest.txt"), "train writes manifest.txt");
        CLI_CHECK(contains(r.out, "p@1"), "train prints the metrics table");

        const listnet::LinearModel model =
            listnet::load_model_file((run_a / "model.txt").string());
        CLI_CHECK(model.weights.size() == 4, "model has one weight per feature");

        const std::string csv = slurp(run_a / "train_report.csv");
        CLI_CHECK(contains(csv, "iteration,loss,eta,seconds"), "report CSV has the header");
        CLI_CHECK(contains(slurp(run_a / "manifest.txt"), "digest-data ="),
                  "manifest records the input digest");
    }

    // --- seed determinism across invocations -------------------------------
    {
        const fs::path run_b = g_tmp / "run_b";
        run("train --data " + data +
            " --k 2 --mode stochastic --sampler adaptive --lists 20 --eta 1e-4" +
            " --iters 8 --seed 7 --out-dir " + run_b.string());
        CLI_CHECK(slurp(run_a / "model.txt") == slurp(run_b / "model.txt"),
                  "same seed, same model bytes");
        CLI_CHECK(slurp(run_a / "train_report.csv") == slurp(run_b / "train_report.csv"),
                  "same seed, same loss trace");
    }

    // --- manifest re-run ----------------------------------------------------
    {
        const fs::path run_c = g_tmp / "run_c";
        RunResult r = run("--config " + (run_a / "manifest.txt").string() + " train --out-dir " +
                          run_c.string());
        CLI_CHECK(r.exit_code == 0, "train from manifest exits 0");
        CLI_CHECK(slurp(run_a / "model.txt") == slurp(run_c / "model.txt"),
                  "manifest re-run reproduces the model");
        CLI_CHECK(slurp(run_a / "train_report.csv") == slurp(run_c / "train_report.csv"),
                  "manifest re-run reproduces the loss trace");
    }

    // --- usage and data errors ----------------------------------------------
    {
        CLI_CHECK(run("train --data " + data + " --k 0").exit_code == 2, "--k 0 is a usage error");
        CLI_CHECK(run("train").exit_code == 2, "missing --data is a usage error");
        CLI_CHECK(run("nonsense").exit_code == 2, "unknown subcommand is a usage error");
        CLI_CHECK(run("train --data " + (g_tmp / "missing.txt").string()).exit_code == 1,
                  "unreadable data file is a data error");

        RunResult r = run("train --data " + wide +
                          " --mode conventional --k 3 --iters 1 --cap 50000");
        CLI_CHECK(r.exit_code == 1, "enumeration above the cap is a data error");
        CLI_CHECK(contains(r.err, "59280"), "resource error names the required class count");
        CLI_CHECK(contains(r.err, "stochastic"), "resource error advises stochastic mode");
    }

    // --- eval ----------------------------------------------------------------
    {
        RunResult r = run("eval --model " + (run_a / "model.txt").string() + " --data " + data);
        CLI_CHECK(r.exit_code == 0, "eval exits 0");
        CLI_CHECK(contains(r.out, "split,cutoff,mean,std,runs"), "eval prints the CSV header");
        CLI_CHECK(contains(r.out, "data,1,"), "eval reports the split by file stem");
        CLI_CHECK(contains(r.out, ",1\n"), "single-model eval reports runs = 1");

        r = run("eval --train " + data + " --data " + data +
                " --repeats 3 --seed-base 5 --jobs 2 --k 1 --iters 5");
        CLI_CHECK(r.exit_code == 0, "repeated-training eval exits 0");
        CLI_CHECK(contains(r.out, ",3\n"), "aggregate reports runs = 3");

        CLI_CHECK(run("eval --data " + data).exit_code == 2,
                  "eval without --model/--train is a usage error");
        CLI_CHECK(run("eval --model " + (run_a / "model.txt").string() + " --train " + data +
                      " --data " + data)
                          .exit_code == 2,
                  "eval with both --model and --train is a usage error");
        CLI_CHECK(run("eval --model " + (g_tmp / "no.txt").string() + " --data " + data)
                          .exit_code == 1,
                  "missing model file is a data error");
    }

    // --- gradcheck -------------------------------------------------------------
    {
        RunResult fine = run("gradcheck --seed 1");
        CLI_CHECK(fine.exit_code == 0, "gradcheck passes at the default step");
        CLI_CHECK(contains(fine.out, "PASS"), "gradcheck prints PASS");

        RunResult coarse = run("gradcheck --seed 1 --h 1e-3");
        const double fine_err = parse_reported(fine.out, "max relative error = ");
        const double coarse_err = parse_reported(coarse.out, "max relative error = ");
        CLI_CHECK(fine_err >= 0.0 && coarse_err >= 0.0, "gradcheck reports the error");
        CLI_CHECK(coarse_err > fine_err, "a coarser step reports a larger error");

        CLI_CHECK(run("gradcheck --seed 1 --k 1").exit_code == 0, "k=1 reduction check passes");
        CLI_CHECK(run("gradcheck --seed 1 --tol 1e-12").exit_code == 1,
                  "an unreachable tolerance fails with a data error");
    }

    // --- enumerate ---------------------------------------------------------------
    {
        // scores with exp(s) = (4, 2, 1)
        RunResult r = run("enumerate --n 3 --k 2 --scores 1.3862943611198906,0.6931471805599453,0");
        CLI_CHECK(r.exit_code == 0, "enumerate exits 0");
        CLI_CHECK(contains(r.out, "(0,1) 0.380952"), "class (0,1) carries 8/21");
        CLI_CHECK(contains(r.out, "sum 1.000000"), "probabilities sum to one");
        int rows = 0;
        for (char c : r.out)
            if (c == '\n') ++rows;
        CLI_CHECK(rows == 7, "six classes plus the sum line");

        CLI_CHECK(run("enumerate --n 40 --k 5 --cap 1000").exit_code == 1,
                  "enumerate respects the cap");
        CLI_CHECK(run("enumerate --n 3 --k 2 --scores 1,2").exit_code == 2,
                  "wrong score count is a usage error");
    }

    // --- bench ---------------------------------------------------------------------
    {
        RunResult r = run("bench --docs 10 --queries 2 --dim 4 --k 1,2 --lists 5 --iters 2"
                          " --seed 1");
        CLI_CHECK(r.exit_code == 0, "bench exits 0");
        CLI_CHECK(contains(r.out, "mode,k,l,n,seconds_per_iter"), "bench prints the CSV header");
        CLI_CHECK(contains(r.out, "conventional,2,90,10,"),
                  "conventional row reports the class count as l");
        CLI_CHECK(contains(r.out, "stochastic,2,5,10,"), "stochastic row reports l");
    }

    if (failures == 0) {
        std::cout << "all CLI checks passed\n";
        fs::remove_all(g_tmp);
        return 0;
    }
    std::cout << failures << " CLI check(s) failed; artifacts kept in " << g_tmp << '\n';
    return 1;
}
