#include "fgx/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgx/bench.hpp"
#include "fgx/fitmetrics.hpp"
#include "fgx/pipeline.hpp"
#include "fgx/series_csv.hpp"

namespace fgx::cli {

namespace {

enum class Background { white, black, alpha };

struct ExtractOptions {
    std::string input;
    std::string output;
    CannyParams params;
    Background background = Background::white;
    std::string dump_edges;
    std::string dump_mask;
};

struct BenchOptions {
    std::string sizes;
    std::string dir;
    int reps = 5;
    std::string csv;
    std::uint64_t seed = 2013;
};

struct MetricsOptions {
    std::string observed;
    std::string predicted;
    std::string weights;
    std::string residuals_out = "residuals.csv";
};

// Usage errors raised after CLI11 has accepted the arguments.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_extract(const ExtractOptions& opt, std::ostream& out) {
    opt.params.validate();
    const ColorImage img = load_image(opt.input);

    const auto t0 = std::chrono::steady_clock::now();
    const Rgb fill = opt.background == Background::black ? kBlack : kWhite;
    const Extraction result = extract_pipeline(img, opt.params, fill);
    const auto t1 = std::chrono::steady_clock::now();

    if (opt.background == Background::alpha) {
        std::vector<std::uint8_t> alpha(result.mask.size());
        std::transform(result.mask.values().begin(), result.mask.values().end(), alpha.begin(),
                       [](std::uint8_t b) { return static_cast<std::uint8_t>(b ? 255 : 0); });
        save_image(result.foreground, opt.output, alpha);
    } else {
        save_image(result.foreground, opt.output);
    }
    if (!opt.dump_edges.empty()) save_bitmap(result.edges, opt.dump_edges);
    if (!opt.dump_mask.empty()) save_bitmap(result.mask, opt.dump_mask);

    out << "size: " << img.width() << "x" << img.height() << "\n"
        << "edge_pixels: " << result.edges.count() << "\n"
        << "mask_pixels: " << result.mask.count() << "\n"
        << "elapsed_s: " << std::chrono::duration<double>(t1 - t0).count() << "\n";
    return kOk;
}

std::vector<std::filesystem::path> image_files(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (ext == ".png" || ext == ".jpg" || ext == ".jpeg") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError("no PNG or JPEG files in " + dir.string());
    return files;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    if (opt.reps < 1) throw UsageError("--reps must be >= 1");
    std::ofstream csv(opt.csv, std::ios::trunc);
    if (!csv) throw IoError("cannot write " + opt.csv);

    const CannyParams params;
    std::vector<BenchRecord> records;
    auto report = [&](const BenchRecord& r) {
        out << r.name << "  " << r.width << "x" << r.height << "  " << r.pixels << " px  " << r.elapsed_s << " s\n";
        records.push_back(r);
    };

    if (!opt.dir.empty()) {
        for (const auto& file : image_files(opt.dir)) {
            const ColorImage img = load_image(file);
            report(bench_image(file.stem().string(), img, params, opt.reps));
        }
    } else {
        const auto sizes = opt.sizes.empty() ? reference_sizes() : parse_sizes(opt.sizes);
        for (const auto& size : sizes) {
            const SyntheticScene scene = synthetic_scene(size, opt.seed);
            report(bench_image("synthetic_" + std::to_string(size.width) + "x" + std::to_string(size.height),
                               scene.image, params, opt.reps));
        }
    }

    write_bench_csv(csv, records);
    csv.close();
    if (!csv) throw IoError("write failed: " + opt.csv);
    if (records.size() >= 2) out << "loglog_slope: " << loglog_slope(records) << "\n";
    return kOk;
}

int cmd_metrics(const MetricsOptions& opt, std::ostream& out) {
    auto observed = read_series(std::filesystem::path(opt.observed));
    auto predicted = read_series(std::filesystem::path(opt.predicted));
    if (observed.empty() || predicted.empty()) throw UsageError("series files must contain at least one value");

    std::optional<PairedSeries> series;
    try {
        if (opt.weights.empty()) {
            series.emplace(std::move(observed), std::move(predicted));
        } else {
            series.emplace(std::move(observed), std::move(predicted), read_series(std::filesystem::path(opt.weights)));
        }
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }

    const FitStats st = fit_stats(*series);
    const auto old_precision = out.precision(17);
    out << "n: " << series->size() << "\n"
        << "SSE: " << st.sse << "\n"
        << "SSR: " << st.ssr << "\n"
        << "SST: " << st.sst << "\n";
    if (st.r_square)
        out << "R-square: " << *st.r_square << "\n";
    else
        out << "R-square: undefined (observed data has zero variance)\n";
    out.precision(old_precision);

    std::ofstream res(opt.residuals_out, std::ios::trunc);
    if (!res) throw IoError("cannot write " + opt.residuals_out);
    write_series(res, "residual", st.residuals);
    res.close();
    if (!res) throw IoError("write failed: " + opt.residuals_out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Foreground object extraction by edge span filling"};
    app.require_subcommand(1);

    ExtractOptions ex;
    auto* extract = app.add_subcommand("extract", "Extract the foreground object of one image");
    extract->add_option("input", ex.input, "Input PNG or JPEG")->required();
    extract->add_option("-o,--output", ex.output, "Output PNG")->required();
    extract->add_option("--low", ex.params.low_threshold, "Low hysteresis threshold (fraction of max)")
        ->capture_default_str();
    extract->add_option("--high", ex.params.high_threshold, "High hysteresis threshold (fraction of max)")
        ->capture_default_str();
    extract->add_option("--sigma", ex.params.sigma, "Gaussian sigma in pixels")->capture_default_str();
    const std::map<std::string, Background> backgrounds{
        {"white", Background::white}, {"black", Background::black}, {"alpha", Background::alpha}};
    extract->add_option("--background", ex.background, "white, black or alpha")
        ->transform(CLI::CheckedTransformer(backgrounds, CLI::ignore_case));
    extract->add_option("--dump-edges", ex.dump_edges, "Write the edge map as a PNG");
    extract->add_option("--dump-mask", ex.dump_mask, "Write the fill mask as a PNG");

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Time the pipeline over a range of frame sizes");
    auto* sizes_opt = bench->add_option("--sizes", bo.sizes, "Comma-separated WxH list");
    auto* dir_opt = bench->add_option("--dir", bo.dir, "Directory of PNG/JPEG images");
    sizes_opt->excludes(dir_opt);
    bench->add_option("--reps", bo.reps, "Timed repetitions per image (median reported)")->capture_default_str();
    bench->add_option("--seed", bo.seed, "Seed for synthetic scenes")->capture_default_str();
    bench->add_option("--csv", bo.csv, "Output CSV path")->required();

    MetricsOptions mo;
    auto* metrics = app.add_subcommand("metrics", "Goodness-of-fit statistics for paired series");
    metrics->add_option("--observed", mo.observed, "Observed values CSV")->required();
    metrics->add_option("--predicted", mo.predicted, "Predicted values CSV")->required();
    metrics->add_option("--weights", mo.weights, "Weights CSV");
    metrics->add_option("--residuals-out", mo.residuals_out, "Residuals CSV")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*extract) return cmd_extract(ex, out);
        if (*bench) return cmd_bench(bo, out);
        if (*metrics) return cmd_metrics(mo, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const FormatError& e) {
        err << "data error: " << e.what() << "\n";
        return kData;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kData;
    }
    return kUsage;
}

}  // namespace fgx::cli
