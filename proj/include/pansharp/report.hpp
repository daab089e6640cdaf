#pragma once

#include <string>
#include <vector>

#include "pansharp/metrics.hpp"

namespace pansharp {

enum class ReportFormat { json, csv };

struct MethodAssessment {
    std::string label;               // e.g. "BT", "HFA", "ORIGIN"
    std::vector<BandMetrics> bands;  // band 1 first
    bool unary_only = false;         // reference row: only SD/En are meaningful
};

struct Report {
    std::vector<MethodAssessment> methods;
};

// Shortest round-trip decimal form; infinity prints "inf".
std::string format_number(double v);

// JSON object keyed method -> band -> metric; degenerate cells serialize as
// the string "degenerate", infinite SNR as "inf".
std::string to_json(const Report& report);

// Table layout: header "Method,Band,SD,En,SNR,NRMSE,DI,CC", one row per band.
std::string to_csv(const Report& report);

std::string serialize(const Report& report, ReportFormat format);

}  // namespace pansharp
