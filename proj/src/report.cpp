#include "pansharp/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace pansharp {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no infinity literal, so sentinel strings stand in for special cells.
ordered_json cell(const std::optional<double>& v) {
    if (!v) return "degenerate";
    if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return *v;
}

std::string csv_cell(const std::optional<double>& v) {
    if (!v) return "degenerate";
    return format_number(*v);
}

}  // namespace

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_json(const Report& report) {
    ordered_json root = ordered_json::object();
    for (const auto& method : report.methods) {
        ordered_json rows = ordered_json::object();
        for (std::size_t k = 0; k < method.bands.size(); ++k) {
            const BandMetrics& bm = method.bands[k];
            ordered_json row = ordered_json::object();
            row["sd"] = cell(bm.sd);
            row["en"] = cell(bm.en);
            if (!method.unary_only) {
                row["snr"] = cell(bm.snr);
                row["nrmse"] = cell(bm.nrmse);
                row["di"] = cell(bm.di);
                row["cc"] = cell(bm.cc);
                row["di_excluded_pixels"] = bm.di_excluded;
            }
            row["pixels"] = bm.pixels;
            rows[std::to_string(k + 1)] = std::move(row);
        }
        root[method.label] = std::move(rows);
    }
    return root.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
    std::string out = "Method,Band,SD,En,SNR,NRMSE,DI,CC\n";
    for (const auto& method : report.methods) {
        for (std::size_t k = 0; k < method.bands.size(); ++k) {
            const BandMetrics& bm = method.bands[k];
            out += method.label + "," + std::to_string(k + 1) + "," + csv_cell(bm.sd) + "," +
                   csv_cell(bm.en) + ",";
            if (method.unary_only) {
                out += ",,,";
            } else {
                out += csv_cell(bm.snr) + "," + csv_cell(bm.nrmse) + "," + csv_cell(bm.di) + "," +
                       csv_cell(bm.cc);
            }
            out += "\n";
        }
    }
    return out;
}

std::string serialize(const Report& report, ReportFormat format) {
    return format == ReportFormat::json ? to_json(report) : to_csv(report);
}

}  // namespace pansharp
