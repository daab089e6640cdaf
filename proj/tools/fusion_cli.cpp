#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pansharp/errors.hpp"
#include "pansharp/experiment.hpp"
#include "pansharp/fusion.hpp"
#include "pansharp/image_io.hpp"
#include "pansharp/metrics.hpp"
#include "pansharp/raster.hpp"
#include "pansharp/report.hpp"

namespace {

// Exit codes: 0 success, 2 usage / invalid arguments, 3 I/O failure,
// 4 malformed image data, 5 invalid samples or degenerate statistics.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitFormat = 4;
constexpr int kExitData = 5;

pansharp::ReportFormat parse_format(const std::string& name) {
    if (name == "json") return pansharp::ReportFormat::json;
    if (name == "csv") return pansharp::ReportFormat::csv;
    throw CLI::ValidationError("--format", "must be 'json' or 'csv'");
}

struct FuseArgs {
    std::string method, pan_path, ms_path, out_path, reference_path, report_path;
    std::string format = "json";
    pansharp::FusionParams params;
    bool hpf_unnormalized = false;
    bool metrics_on_quantized = false;
};

struct MetricsArgs {
    std::string fused_path, reference_path, report_path;
    std::string format = "json";
    bool metrics_on_quantized = false;
};

struct ExperimentArgs {
    std::string reference_path, report_path;
    std::string format = "json";
    std::string methods;
    pansharp::ExperimentConfig config;
    bool hpf_unnormalized = false;
};

int run_fuse(const FuseArgs& args) {
    const auto method = pansharp::parse_method(args.method);
    if (!method)
        throw std::invalid_argument("unknown method '" + args.method +
                                    "' (expected brovey|cn|mlt|hpfa|hfa|hfm|wavelet)");
    pansharp::FusionParams params = args.params;
    params.hpf_normalized = !args.hpf_unnormalized;

    const pansharp::Image pan_img = pansharp::load_image(args.pan_path);
    if (pan_img.size() != 1)
        throw std::invalid_argument("PAN input must be a single-band graymap: " + args.pan_path);
    const pansharp::Band& pan = pan_img.front();

    pansharp::Image ms = pansharp::load_image(args.ms_path);
    if (ms.front().rows() > pan.rows() || ms.front().cols() > pan.cols())
        throw std::invalid_argument("MS is larger than PAN; expected PAN at the finer resolution");
    ms = pansharp::resample_nearest(ms, pan.rows(), pan.cols());

    const pansharp::Image fused = pansharp::fuse(*method, ms, pan, params);
    pansharp::save_image(args.out_path, fused);

    if (!args.report_path.empty()) {
        pansharp::Image reference = ms;
        if (!args.reference_path.empty())
            reference = pansharp::resample_nearest(pansharp::load_image(args.reference_path),
                                                   pan.rows(), pan.cols());
        pansharp::Report report;
        report.methods.push_back({pansharp::method_label(*method),
                                  pansharp::assess(fused, reference, args.metrics_on_quantized),
                                  false});
        pansharp::write_file_atomic(args.report_path,
                                    pansharp::serialize(report, parse_format(args.format)));
    }
    return 0;
}

int run_metrics(const MetricsArgs& args) {
    const pansharp::Image fused = pansharp::load_image(args.fused_path);
    const pansharp::Image reference = pansharp::load_image(args.reference_path);
    if (fused.front().rows() != reference.front().rows() ||
        fused.front().cols() != reference.front().cols())
        throw std::invalid_argument(
            "geometry mismatch: fused is " + std::to_string(fused.front().cols()) + "x" +
            std::to_string(fused.front().rows()) + ", reference is " +
            std::to_string(reference.front().cols()) + "x" +
            std::to_string(reference.front().rows()));

    pansharp::Report report;
    report.methods.push_back({std::filesystem::path(args.fused_path).stem().string(),
                              pansharp::assess(fused, reference, args.metrics_on_quantized),
                              false});
    pansharp::write_file_atomic(args.report_path,
                                pansharp::serialize(report, parse_format(args.format)));
    return 0;
}

int run_experiment_cmd(const ExperimentArgs& args) {
    pansharp::ExperimentConfig config = args.config;
    config.params.hpf_normalized = !args.hpf_unnormalized;
    if (!args.methods.empty()) {
        std::string token;
        std::istringstream src(args.methods);
        while (std::getline(src, token, ',')) {
            const auto m = pansharp::parse_method(token);
            if (!m) throw std::invalid_argument("unknown method '" + token + "' in --methods");
            config.methods.push_back(*m);
        }
    }
    const pansharp::Image reference = pansharp::load_image(args.reference_path);
    const pansharp::Report report = pansharp::run_experiment(reference, config);
    pansharp::write_file_atomic(args.report_path,
                                pansharp::serialize(report, parse_format(args.format)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "pansharp: pixel-level pan-sharpening (Brovey, CN, multiplicative, HPFA, HFA, HFM, "
        "wavelet) with SD/En/SNR/NRMSE/DI/CC quality reports"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 success, 2 usage error, 3 I/O error, 4 malformed image, 5 invalid or "
        "degenerate data.");

    FuseArgs fuse_args;
    CLI::App* fuse = app.add_subcommand("fuse", "Fuse a PAN band with an MS image");
    fuse->add_option("--method", fuse_args.method, "brovey|cn|mlt|hpfa|hfa|hfm|wavelet")
        ->required();
    fuse->add_option("--pan", fuse_args.pan_path, "PAN graymap (P2/P5)")->required();
    fuse->add_option("--ms", fuse_args.ms_path, "MS graymap or pixmap")->required();
    fuse->add_option("--out", fuse_args.out_path, "output image path")->required();
    fuse->add_option("--kernel", fuse_args.params.kernel_size, "box kernel size (odd, >= 3)")
        ->capture_default_str();
    fuse->add_option("--levels", fuse_args.params.levels, "wavelet decomposition levels")
        ->capture_default_str();
    fuse->add_option("--boost", fuse_args.params.boost, "high-boost factor for hfa (1 = unsharp)")
        ->capture_default_str();
    fuse->add_flag("--hpf-unnormalized", fuse_args.hpf_unnormalized,
                   "drop the 1/n^2 prefactor of the high-pass kernel");
    fuse->add_flag("--metrics-on-quantized", fuse_args.metrics_on_quantized,
                   "compute all report metrics on quantized samples");
    fuse->add_option("--reference", fuse_args.reference_path,
                     "reference image for the report (default: the resampled MS input)");
    fuse->add_option("--report", fuse_args.report_path, "write a metrics report here");
    fuse->add_option("--format", fuse_args.format, "report format: json|csv")
        ->capture_default_str();

    MetricsArgs metrics_args;
    CLI::App* metrics = app.add_subcommand("metrics", "Score a fused image against a reference");
    metrics->add_option("--fused", metrics_args.fused_path, "fused image")->required();
    metrics->add_option("--reference", metrics_args.reference_path, "reference image")->required();
    metrics->add_option("--report", metrics_args.report_path, "report output path")->required();
    metrics->add_option("--format", metrics_args.format, "report format: json|csv")
        ->capture_default_str();
    metrics->add_flag("--metrics-on-quantized", metrics_args.metrics_on_quantized,
                      "compute all metrics on quantized samples");

    ExperimentArgs exp_args;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "Degrade a reference, fuse with every method, and score the results");
    experiment->add_option("--reference", exp_args.reference_path, "3-band reference pixmap")
        ->required();
    experiment->add_option("--report", exp_args.report_path, "report output path")->required();
    experiment->add_option("--factor", exp_args.config.factor, "PAN/MS resolution ratio")
        ->capture_default_str();
    experiment->add_option("--blur", exp_args.config.blur_size,
                           "box blur width before decimation (0 = smallest odd >= factor)")
        ->capture_default_str();
    experiment->add_option("--seed", exp_args.config.seed, "seed for the mismatch fields")
        ->capture_default_str();
    experiment
        ->add_option("--mismatch", exp_args.config.mismatch,
                     "acquisition mismatch strength for the synthetic PAN (0 = pure band mean)")
        ->capture_default_str();
    experiment->add_option("--kernel", exp_args.config.params.kernel_size, "box kernel size")
        ->capture_default_str();
    experiment->add_option("--levels", exp_args.config.params.levels, "wavelet levels")
        ->capture_default_str();
    experiment->add_option("--boost", exp_args.config.params.boost, "high-boost factor for hfa")
        ->capture_default_str();
    experiment->add_flag("--hpf-unnormalized", exp_args.hpf_unnormalized,
                         "drop the 1/n^2 high-pass prefactor");
    experiment->add_flag("--metrics-on-quantized", exp_args.config.metrics_on_quantized,
                         "compute all metrics on quantized samples");
    experiment->add_option("--methods", exp_args.methods,
                           "comma-separated subset of methods (default: all)");
    experiment->add_option("--format", exp_args.format, "report format: json|csv")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (fuse->parsed()) return run_fuse(fuse_args);
        if (metrics->parsed()) return run_metrics(metrics_args);
        if (experiment->parsed()) return run_experiment_cmd(exp_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const pansharp::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const pansharp::format_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFormat;
    } catch (const pansharp::invalid_data_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const pansharp::degenerate_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
