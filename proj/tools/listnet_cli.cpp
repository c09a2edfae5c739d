// listnet: listwise learning-to-rank toolkit.
//
// Subcommands: train, eval, gradcheck, bench, synth, enumerate.
// Exit codes: 0 success, 1 data or tolerance failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "listnet/core.hpp"
#include "listnet/errors.hpp"
#include "listnet/gradients.hpp"
#include "listnet/kernels.hpp"
#include "listnet/letor.hpp"
#include "listnet/metrics.hpp"
#include "listnet/permutation.hpp"
#include "listnet/report_io.hpp"
#include "listnet/rng.hpp"
#include "listnet/samplers.hpp"
#include "listnet/trainer.hpp"
#include "listnet/version.hpp"

namespace fs = std::filesystem;
using namespace listnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

std::uint64_t env_default_seed() {
    if (const char* env = std::getenv("LISTNET_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable LISTNET_SEED='" << env << "'\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// shared training flags (train, eval --repeats, bench)

struct TrainFlags {
    std::string data;
    int k = 1;
    std::string mode = "stochastic";
    std::string sampler = "uniform";
    int lists = 50;
    bool resample = false;
    bool no_resample = false;
    int max_retention_attempts = 20;
    double eta = 0.0;  // 0 = pick the k-dependent default
    int iters = 50;
    double init_range = 0.01;
    std::string monitor = "top1_full";
    std::uint64_t seed = env_default_seed();
    std::uint64_t cap = kDefaultClassCap;
    bool normalize = false;

    CLI::Option* eta_opt = nullptr;
    CLI::Option* resample_opt = nullptr;
    CLI::Option* no_resample_opt = nullptr;
};

void add_train_flags(CLI::App* cmd, TrainFlags& flags, bool data_required) {
    CLI::Option* data = cmd->add_option("--data", flags.data, "training data file (LETOR format)");
    if (data_required) data->required();
    cmd->add_option("--k", flags.k, "Top-k model order")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    cmd->add_option("--mode", flags.mode, "training mode")
        ->check(CLI::IsMember({"conventional", "stochastic"}))
        ->capture_default_str();
    cmd->add_option("--sampler", flags.sampler, "document sampling distribution")
        ->check(CLI::IsMember({"uniform", "fixed", "adaptive"}))
        ->capture_default_str();
    cmd->add_option("--lists", flags.lists, "sampled lists per query (l)")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    flags.resample_opt = cmd->add_flag("--resample", flags.resample,
                                       "retention re-sampling (default: on for k >= 2)");
    flags.no_resample_opt = cmd->add_flag("--no-resample", flags.no_resample,
                                          "disable retention re-sampling");
    cmd->add_option("--max-retention-attempts", flags.max_retention_attempts,
                    "draws per list before the last one is kept")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    flags.eta_opt = cmd->add_option("--eta", flags.eta,
                                    "learning rate (default: 1e-3 for k=1, 1e-5 for k>1)");
    cmd->add_option("--iters", flags.iters, "training iterations (T)")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    cmd->add_option("--init-range", flags.init_range, "weights start uniform in [-r, r]")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--monitor", flags.monitor, "loss used for the decay rule")
        ->check(CLI::IsMember({"top1_full", "sampled"}))
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "RNG seed (env LISTNET_SEED overrides the default)")
        ->capture_default_str();
    cmd->add_option("--cap", flags.cap, "class-enumeration cap")->capture_default_str();
    cmd->add_flag("--normalize", flags.normalize, "per-query min-max feature normalization");
}

TrainConfig resolve_train_config(const TrainFlags& flags) {
    TrainConfig config;
    config.k = flags.k;
    config.mode = train_mode_from_string(flags.mode);
    config.sampler.kind = sampling_kind_from_string(flags.sampler);
    config.sampler.list_count = flags.lists;
    config.sampler.max_retention_attempts = flags.max_retention_attempts;
    config.eta = flags.eta_opt->count() > 0 ? flags.eta : (flags.k == 1 ? 1e-3 : 1e-5);
    config.iterations = flags.iters;
    config.init_range = flags.init_range;
    config.monitor = loss_monitor_from_string(flags.monitor);
    config.seed = flags.seed;
    config.enumeration_cap = flags.cap;

    // re-sampling defaults off for Top-1, on otherwise; flags override
    if (flags.no_resample_opt->count() > 0) {
        config.sampler.resample = false;
    } else if (flags.resample_opt->count() > 0) {
        config.sampler.resample = true;
    } else {
        config.sampler.resample = flags.k >= 2;
    }
    return config;
}

Dataset load_dataset(const std::string& path, bool normalize) {
    Dataset dataset = load_letor_file(path);
    if (normalize) minmax_normalize(dataset);
    return dataset;
}

void write_manifest(const fs::path& path, const std::string& command, const TrainFlags& flags,
                    const TrainConfig& config, const std::string& started,
                    const std::string& finished) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << "[meta]\n";
    out << "version = " << kVersion << '\n';
    out << "command = " << command << '\n';
    out << "started_utc = " << started << '\n';
    out << "finished_utc = " << finished << '\n';
    out << "kernel = " << kernels::name(kernels::active()) << '\n';
    out << "digest-data = " << fnv1a_file_digest(flags.data) << '\n';
    out << "\n[" << command << "]\n";
    out << "data = " << flags.data << '\n';
    out << "k = " << config.k << '\n';
    out << "mode = " << to_string(config.mode) << '\n';
    out << "sampler = " << to_string(config.sampler.kind) << '\n';
    out << "lists = " << config.sampler.list_count << '\n';
    out << (config.sampler.resample ? "resample = true\n" : "no-resample = true\n");
    out << "max-retention-attempts = " << config.sampler.max_retention_attempts << '\n';
    out << "eta = " << format_double(config.eta) << '\n';
    out << "iters = " << config.iterations << '\n';
    out << "init-range = " << format_double(config.init_range) << '\n';
    out << "monitor = " << to_string(config.monitor) << '\n';
    out << "seed = " << config.seed << '\n';
    out << "cap = " << config.enumeration_cap << '\n';
    if (flags.normalize) out << "normalize = true\n";
}

// ---------------------------------------------------------------------------
// train

struct TrainCmd {
    TrainFlags flags;
    std::string out_dir = ".";
};

int run_train(const TrainCmd& cmd) {
    const std::string started = iso8601_utc_now();
    const TrainConfig config = resolve_train_config(cmd.flags);
    const Dataset dataset = load_dataset(cmd.flags.data, cmd.flags.normalize);

    const TrainReport report = train(dataset, config);
    const std::string finished = iso8601_utc_now();

    const fs::path out_dir(cmd.out_dir);
    fs::create_directories(out_dir);
    save_model_file(report.model, (out_dir / "model.txt").string());
    {
        std::ofstream csv(out_dir / "train_report.csv");
        write_train_report_csv(report, csv);
        std::ofstream kv(out_dir / "train_report.txt");
        write_train_report_kv(report, kv);
    }
    write_manifest(out_dir / "manifest.txt", "train", cmd.flags, config, started, finished);

    double total_seconds = 0.0;
    for (double s : report.iteration_seconds) total_seconds += s;
    std::cout << "trained " << report.loss.size() << " iterations in "
              << format_double(total_seconds) << " s ("
              << format_double(total_seconds /
                               static_cast<double>(std::max<std::size_t>(report.loss.size(), 1)))
              << " s/iter, kernel " << kernels::name(kernels::active()) << ")\n";
    std::cout << "final loss " << format_double(report.loss.back()) << ", final eta "
              << format_double(report.final_eta) << ", decay events " << report.decay_events
              << "\n\n";
    std::cout << "split cutoff precision\n";
    for (const auto& [cutoff, value] : report.train_metrics.p_at)
        std::cout << "train p@" << cutoff << " " << format_double(value) << '\n';
    std::cout << "\nartifacts in " << out_dir.string() << ": model.txt train_report.csv "
              << "train_report.txt manifest.txt\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalCmd {
    TrainFlags flags;  // used by the repeated-training protocol
    std::string model_path;
    std::string train_path;
    std::vector<std::string> data_paths;
    std::vector<int> cutoffs{1, 10};
    int relevance_min = 1;
    int repeats = 20;
    std::uint64_t seed_base = 100;
    int jobs = 1;
    std::string out_path;
    CLI::Option* repeats_opt = nullptr;
};

std::string split_name(const std::string& path) {
    return fs::path(path).stem().string();
}

void emit_csv(std::ostream& out, const std::string& split, const RunSummary& summary) {
    for (const auto& [cutoff, mean] : summary.mean) {
        out << split << ',' << cutoff << ',' << format_double(mean) << ','
            << format_double(summary.stddev.at(cutoff)) << ',' << summary.runs << '\n';
    }
}

int run_eval(const EvalCmd& cmd) {
    const bool have_model = !cmd.model_path.empty();
    const bool have_train = !cmd.train_path.empty();
    if (have_model == have_train) {
        std::cerr << "eval: pass exactly one of --model or --train\n";
        return kExitUsage;
    }
    if (cmd.data_paths.empty()) {
        std::cerr << "eval: at least one --data split is required\n";
        return kExitUsage;
    }

    std::vector<std::pair<std::string, Dataset>> splits;
    for (const std::string& path : cmd.data_paths)
        splits.emplace_back(split_name(path), load_dataset(path, cmd.flags.normalize));

    std::ostringstream csv;
    csv << "split,cutoff,mean,std,runs\n";

    if (have_model) {
        const LinearModel model = load_model_file(cmd.model_path);
        for (const auto& [name, dataset] : splits) {
            const EvalResult result =
                evaluate(dataset, model, cmd.cutoffs, cmd.relevance_min);
            emit_csv(csv, name, aggregate_runs({result}));
        }
    } else {
        const Dataset train_data = load_dataset(cmd.train_path, cmd.flags.normalize);
        const int repeats = cmd.repeats_opt->count() > 0 ? cmd.repeats : 20;
        const TrainConfig base = resolve_train_config(cmd.flags);

        // one model per seed; seeds fan out over a bounded worker pool and
        // results merge by seed order
        std::vector<LinearModel> models(static_cast<std::size_t>(repeats));
        std::atomic<int> next{0};
        std::atomic<bool> failed{false};
        std::string failure;
        std::mutex failure_mutex;
        kernels::active();  // settle the dispatch table before threading

        auto worker = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= repeats || failed.load()) return;
                TrainConfig config = base;
                config.seed = cmd.seed_base + static_cast<std::uint64_t>(i);
                try {
                    models[static_cast<std::size_t>(i)] = train(train_data, config).model;
                } catch (const std::exception& e) {
                    const std::scoped_lock lock(failure_mutex);
                    failed = true;
                    failure = e.what();
                    return;
                }
            }
        };
        const int jobs = std::clamp(cmd.jobs, 1, repeats);
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failed) throw std::runtime_error(failure);

        for (const auto& [name, dataset] : splits) {
            std::vector<EvalResult> results;
            results.reserve(models.size());
            for (const LinearModel& model : models)
                results.push_back(evaluate(dataset, model, cmd.cutoffs, cmd.relevance_min));
            emit_csv(csv, name, aggregate_runs(results));
        }
    }

    if (cmd.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(cmd.out_path);
        if (!out) throw std::runtime_error("cannot open '" + cmd.out_path + "' for writing");
        out << csv.str();
        std::cout << "wrote " << cmd.out_path << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// gradcheck

struct GradcheckCmd {
    int instances = 50;
    double h = 1e-5;
    double tol = 1e-4;
    double reduction_tol = 1e-10;
    int dim = 5;
    int k = 0;  // 0 = sweep the n-dependent grid
    std::uint64_t seed = env_default_seed();
};

int run_gradcheck(const GradcheckCmd& cmd) {
    std::mt19937_64 gen(mix_seed(cmd.seed, 17));
    const std::size_t d = static_cast<std::size_t>(cmd.dim);

    double max_rel_err = 0.0;
    double max_reduction_err = 0.0;
    for (int i = 0; i < cmd.instances; ++i) {
        const int n = 3 + static_cast<int>(uniform_index(gen, 4));  // 3..6
        const int k = cmd.k > 0 ? std::min(cmd.k, n)
                                : 1 + static_cast<int>(uniform_index(
                                          gen, static_cast<std::size_t>(std::min(4, n))));

        QueryInstance query;
        query.query_id = std::to_string(i);
        for (int j = 0; j < n; ++j) {
            Document doc;
            doc.label = static_cast<int>(uniform_index(gen, 3));
            doc.features.resize(d);
            for (double& x : doc.features) x = uniform_range(gen, -1.0, 1.0);
            query.documents.push_back(std::move(doc));
        }
        LinearModel model;
        model.weights.resize(d);
        for (double& w : model.weights) w = uniform_range(gen, -1.0, 1.0);

        const ClassSet set = enumerate_classes(n, k);
        const GradientVector analytic = topk_gradient(query, model, set);
        const GradientVector numeric = finite_difference_gradient(query, model, set, cmd.h);
        for (std::size_t c = 0; c < d; ++c) {
            const double diff = std::abs(analytic[c] - numeric[c]);
            if (diff <= 1e-8) continue;
            max_rel_err =
                std::max(max_rel_err, diff / std::max(std::abs(analytic[c]), std::abs(numeric[c])));
        }

        const ClassSet top1 = enumerate_classes(n, 1);
        const GradientVector general = topk_gradient(query, model, top1);
        const GradientVector closed = top1_gradient(query, model);
        for (std::size_t c = 0; c < d; ++c)
            max_reduction_err = std::max(max_reduction_err, std::abs(general[c] - closed[c]));
    }

    std::cout << "instances = " << cmd.instances << '\n';
    std::cout << "h = " << format_double(cmd.h) << '\n';
    std::cout << "max relative error = " << format_double(max_rel_err) << " (tolerance "
              << format_double(cmd.tol) << ")\n";
    std::cout << "top1 reduction max abs error = " << format_double(max_reduction_err)
              << " (tolerance " << format_double(cmd.reduction_tol) << ")\n";
    const bool ok = max_rel_err < cmd.tol && max_reduction_err < cmd.reduction_tol;
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitData;
}

// ---------------------------------------------------------------------------
// bench

struct BenchCmd {
    std::string data;
    int docs = 40;
    int queries = 8;
    int dim = 46;
    std::vector<int> ks{2};
    std::vector<int> lists{50};
    std::string sampler = "uniform";
    int iters = 3;
    std::uint64_t seed = env_default_seed();
    std::uint64_t cap = kDefaultClassCap;
    std::string modes = "both";
    std::string out_path;
};

double median_seconds(std::vector<double> seconds) {
    std::sort(seconds.begin(), seconds.end());
    return seconds[seconds.size() / 2];
}

int run_bench(const BenchCmd& cmd) {
    Dataset dataset;
    if (cmd.data.empty()) {
        SyntheticSpec spec;
        spec.num_queries = static_cast<std::size_t>(cmd.queries);
        spec.docs_per_query = static_cast<std::size_t>(cmd.docs);
        spec.dim = static_cast<std::size_t>(cmd.dim);
        spec.seed = cmd.seed;
        dataset = generate_synthetic(spec);
    } else {
        dataset = load_letor_file(cmd.data);
    }
    const int n = static_cast<int>(dataset.queries.front().size());

    std::ostringstream csv;
    csv << "mode,k,l,n,seconds_per_iter\n";

    for (int k : cmd.ks) {
        if (cmd.modes == "both" || cmd.modes == "conventional") {
            TrainConfig config;
            config.k = k;
            config.mode = TrainMode::conventional;
            config.eta = k == 1 ? 1e-3 : 1e-5;
            config.iterations = cmd.iters;
            config.seed = cmd.seed;
            config.enumeration_cap = cmd.cap;
            const TrainReport report = train(dataset, config);
            csv << "conventional," << k << ','
                << count_classes(n, std::min(k, n), cmd.cap) << ',' << n << ','
                << format_double(median_seconds(report.iteration_seconds)) << '\n';
        }
        if (cmd.modes == "both" || cmd.modes == "stochastic") {
            for (int l : cmd.lists) {
                TrainConfig config;
                config.k = k;
                config.mode = TrainMode::stochastic;
                config.sampler.kind = sampling_kind_from_string(cmd.sampler);
                config.sampler.list_count = l;
                config.sampler.resample = k >= 2;
                config.eta = k == 1 ? 1e-3 : 1e-5;
                config.iterations = cmd.iters;
                config.seed = cmd.seed;
                const TrainReport report = train(dataset, config);
                csv << "stochastic," << k << ',' << l << ',' << n << ','
                    << format_double(median_seconds(report.iteration_seconds)) << '\n';
            }
        }
    }

    if (cmd.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(cmd.out_path);
        if (!out) throw std::runtime_error("cannot open '" + cmd.out_path + "' for writing");
        out << csv.str();
        std::cout << "wrote " << cmd.out_path << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// synth

struct SynthCmd {
    std::size_t queries = 100;
    std::size_t docs = 12;
    std::size_t dim = 5;
    std::vector<double> weights;
    double noise = 0.0;
    std::uint64_t seed = env_default_seed();
    std::string out_path;
};

int run_synth(const SynthCmd& cmd) {
    SyntheticSpec spec;
    spec.num_queries = cmd.queries;
    spec.docs_per_query = cmd.docs;
    spec.dim = cmd.dim;
    spec.weights = cmd.weights;
    spec.noise = cmd.noise;
    spec.seed = cmd.seed;
    save_letor_file(generate_synthetic(spec), cmd.out_path);
    std::cout << "wrote " << cmd.out_path << " (" << cmd.queries << " queries x " << cmd.docs
              << " docs, dim " << cmd.dim << ", seed " << cmd.seed << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateCmd {
    int n = 3;
    int k = 1;
    std::vector<double> scores;
    std::uint64_t cap = kDefaultClassCap;
};

int run_enumerate(const EnumerateCmd& cmd) {
    std::vector<double> scores = cmd.scores;
    if (scores.empty()) scores.assign(static_cast<std::size_t>(cmd.n), 0.0);
    if (scores.size() != static_cast<std::size_t>(cmd.n)) {
        std::cerr << "enumerate: --scores must provide exactly n values\n";
        return kExitUsage;
    }

    const ClassSet set = enumerate_classes(cmd.n, cmd.k, cmd.cap);
    const std::vector<double> probs = class_distribution(scores, set);
    double total = 0.0;
    char buffer[32];
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto prefix = set.prefix(i);
        std::cout << '(';
        for (std::size_t t = 0; t < prefix.size(); ++t) {
            if (t > 0) std::cout << ',';
            std::cout << prefix[t];
        }
        std::snprintf(buffer, sizeof(buffer), "%.6f", probs[i]);
        std::cout << ") " << buffer << '\n';
        total += probs[i];
    }
    std::snprintf(buffer, sizeof(buffer), "%.6f", total);
    std::cout << "sum " << buffer << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"listwise learning-to-rank toolkit (Top-k ListNet, linear model)"};
    app.set_version_flag("--version", std::string("listnet ") + kVersion);
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value config file; flags override");
    app.allow_config_extras(true);

    TrainCmd train_cmd;
    CLI::App* train_app = app.add_subcommand("train", "train a model and write artifacts");
    add_train_flags(train_app, train_cmd.flags, true);
    train_app->add_option("--out-dir", train_cmd.out_dir, "artifact directory")
        ->capture_default_str();

    EvalCmd eval_cmd;
    CLI::App* eval_app =
        app.add_subcommand("eval", "evaluate a model file, or aggregate repeated trainings");
    eval_app->add_option("--model", eval_cmd.model_path, "model weights file");
    eval_app->add_option("--train", eval_cmd.train_path,
                         "training data for the repeated-training protocol");
    eval_app->add_option("--data", eval_cmd.data_paths, "evaluation split(s)")->required();
    eval_app->add_option("--cutoffs", eval_cmd.cutoffs, "precision cutoffs")
        ->delimiter(',')
        ->capture_default_str();
    eval_app->add_option("--relevance-min", eval_cmd.relevance_min,
                         "lowest label counted as relevant")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    eval_cmd.repeats_opt =
        eval_app->add_option("--repeats", eval_cmd.repeats, "seeded trainings to aggregate")
            ->check(CLI::Range(1, 1 << 20));
    eval_app->add_option("--seed-base", eval_cmd.seed_base, "first seed of the repeat series")
        ->capture_default_str();
    eval_app->add_option("--jobs", eval_cmd.jobs, "concurrent trainings")
        ->check(CLI::Range(1, 1 << 10))
        ->capture_default_str();
    eval_app->add_option("--out", eval_cmd.out_path, "write the CSV here instead of stdout");
    add_train_flags(eval_app, eval_cmd.flags, false);

    GradcheckCmd gradcheck_cmd;
    CLI::App* gradcheck_app =
        app.add_subcommand("gradcheck", "finite-difference check of the analytic gradients");
    gradcheck_app->add_option("--instances", gradcheck_cmd.instances, "random instances")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    gradcheck_app->add_option("--h", gradcheck_cmd.h, "finite-difference step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gradcheck_app->add_option("--tol", gradcheck_cmd.tol, "relative-error tolerance")
        ->capture_default_str();
    gradcheck_app->add_option("--dim", gradcheck_cmd.dim, "feature dimension")
        ->check(CLI::Range(1, 1 << 12))
        ->capture_default_str();
    gradcheck_app->add_option("--k", gradcheck_cmd.k, "fix the class order (default: sweep 1..4)")
        ->check(CLI::Range(1, 6));
    gradcheck_app->add_option("--seed", gradcheck_cmd.seed, "RNG seed")->capture_default_str();

    BenchCmd bench_cmd;
    CLI::App* bench_app =
        app.add_subcommand("bench", "per-iteration wall-clock comparison, CSV output");
    bench_app->add_option("--data", bench_cmd.data, "bench on this file instead of synthetic data");
    bench_app->add_option("--docs", bench_cmd.docs, "documents per synthetic query")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    bench_app->add_option("--queries", bench_cmd.queries, "synthetic query count")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    bench_app->add_option("--dim", bench_cmd.dim, "synthetic feature dimension")
        ->check(CLI::Range(1, 1 << 12))
        ->capture_default_str();
    bench_app->add_option("--k", bench_cmd.ks, "model order(s)")
        ->delimiter(',')
        ->capture_default_str();
    bench_app->add_option("--lists", bench_cmd.lists, "list count(s) for stochastic mode")
        ->delimiter(',')
        ->capture_default_str();
    bench_app->add_option("--sampler", bench_cmd.sampler, "sampling distribution")
        ->check(CLI::IsMember({"uniform", "fixed", "adaptive"}))
        ->capture_default_str();
    bench_app->add_option("--iters", bench_cmd.iters, "iterations per configuration")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    bench_app->add_option("--seed", bench_cmd.seed, "RNG seed")->capture_default_str();
    bench_app->add_option("--cap", bench_cmd.cap, "class-enumeration cap")->capture_default_str();
    bench_app->add_option("--modes", bench_cmd.modes, "which modes to time")
        ->check(CLI::IsMember({"both", "conventional", "stochastic"}))
        ->capture_default_str();
    bench_app->add_option("--out", bench_cmd.out_path, "write the CSV here instead of stdout");

    SynthCmd synth_cmd;
    CLI::App* synth_app = app.add_subcommand("synth", "generate a synthetic LETOR file");
    synth_app->add_option("--queries", synth_cmd.queries, "query count")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    synth_app->add_option("--docs", synth_cmd.docs, "documents per query")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    synth_app->add_option("--dim", synth_cmd.dim, "feature dimension")
        ->check(CLI::Range(1, 1 << 12))
        ->capture_default_str();
    synth_app->add_option("--weights", synth_cmd.weights,
                          "latent weight vector (default: drawn from the seed)")
        ->delimiter(',');
    synth_app->add_option("--noise", synth_cmd.noise, "label noise probability")
        ->check(CLI::Range(0.0, 0.999))
        ->capture_default_str();
    synth_app->add_option("--seed", synth_cmd.seed, "RNG seed")->capture_default_str();
    synth_app->add_option("--out", synth_cmd.out_path, "output file")->required();

    EnumerateCmd enumerate_cmd;
    CLI::App* enumerate_app =
        app.add_subcommand("enumerate", "list every Top-k class with its probability");
    enumerate_app->add_option("--n", enumerate_cmd.n, "document count")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    enumerate_app->add_option("--k", enumerate_cmd.k, "class order")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    enumerate_app->add_option("--scores", enumerate_cmd.scores,
                              "comma-separated scores (default: all zero)")
        ->delimiter(',');
    enumerate_app->add_option("--cap", enumerate_cmd.cap, "class-enumeration cap")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*train_app) return run_train(train_cmd);
        if (*eval_app) return run_eval(eval_cmd);
        if (*gradcheck_app) return run_gradcheck(gradcheck_cmd);
        if (*bench_app) return run_bench(bench_cmd);
        if (*synth_app) return run_synth(synth_cmd);
        if (*enumerate_app) return run_enumerate(enumerate_cmd);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
