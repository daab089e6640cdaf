#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pansharp/report.hpp"

using namespace pansharp;

namespace {

BandMetrics sample_band() {
    BandMetrics bm;
    bm.sd = 12.5;
    bm.en = 7.25;
    bm.snr = 3.0;
    bm.nrmse = 0.1;
    bm.di = 0.05;
    bm.cc = 0.875;
    bm.di_excluded = 4;
    bm.pixels = 1600;
    return bm;
}

Report sample_report() {
    Report report;
    MethodAssessment origin;
    origin.label = "ORIGIN";
    origin.unary_only = true;
    BandMetrics ob;
    ob.sd = 50.0;
    ob.en = 6.5;
    ob.pixels = 1600;
    origin.bands = {ob, ob};

    MethodAssessment bt;
    bt.label = "BT";
    bt.bands = {sample_band(), sample_band()};
    bt.bands[1].snr = std::numeric_limits<double>::infinity();
    bt.bands[1].cc.reset();

    report.methods = {origin, bt};
    return report;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("format_number emits shortest round-trip decimals") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(127.5) == "127.5");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");

    // Round trip exactly through strtod for awkward values.
    for (const double v : {1.0 / 3.0, 0.8, 2.5e-13, 123456.789, 8.0}) {
        const std::string s = format_number(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv header and layout") {
    const std::string csv = to_csv(sample_report());
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "Method,Band,SD,En,SNR,NRMSE,DI,CC");
    CHECK(lines[1] == "ORIGIN,1,50,6.5,,,,");
    CHECK(lines[2] == "ORIGIN,2,50,6.5,,,,");
    CHECK(lines[3] == "BT,1,12.5,7.25,3,0.1,0.05,0.875");
    CHECK(lines[4] == "BT,2,12.5,7.25,inf,0.1,0.05,degenerate");
    CHECK(csv.back() == '\n');
}

TEST_CASE("json structure, sentinels, and key order") {
    const std::string text = to_json(sample_report());
    CHECK(text.back() == '\n');
    const auto root = nlohmann::ordered_json::parse(text);

    std::vector<std::string> methods;
    for (const auto& item : root.items()) methods.push_back(item.key());
    CHECK(methods == std::vector<std::string>{"ORIGIN", "BT"});

    const auto& origin1 = root["ORIGIN"]["1"];
    CHECK(origin1["sd"].get<double>() == 50.0);
    CHECK(origin1["en"].get<double>() == 6.5);
    CHECK(origin1["pixels"].get<std::int64_t>() == 1600);
    CHECK(!origin1.contains("snr"));
    CHECK(!origin1.contains("cc"));
    CHECK(!origin1.contains("di_excluded_pixels"));

    const auto& bt1 = root["BT"]["1"];
    std::vector<std::string> keys;
    for (const auto& item : bt1.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"sd", "en", "snr", "nrmse", "di", "cc",
                                           "di_excluded_pixels", "pixels"});
    CHECK(bt1["sd"].get<double>() == 12.5);
    CHECK(bt1["cc"].get<double>() == 0.875);
    CHECK(bt1["di_excluded_pixels"].get<std::int64_t>() == 4);

    const auto& bt2 = root["BT"]["2"];
    CHECK(bt2["snr"].get<std::string>() == "inf");
    CHECK(bt2["cc"].get<std::string>() == "degenerate");
    CHECK(bt2["nrmse"].get<double>() == 0.1);
}

TEST_CASE("json numbers survive a parse round trip") {
    Report report;
    MethodAssessment m;
    m.label = "HFM";
    BandMetrics bm = sample_band();
    bm.sd = 1.0 / 3.0;
    bm.cc = 0.123456789012345;
    m.bands = {bm};
    report.methods = {m};

    const auto root = nlohmann::ordered_json::parse(to_json(report));
    CHECK(root["HFM"]["1"]["sd"].get<double>() == 1.0 / 3.0);
    CHECK(root["HFM"]["1"]["cc"].get<double>() == 0.123456789012345);
}

TEST_CASE("serialize dispatches on format") {
    const Report report = sample_report();
    CHECK(serialize(report, ReportFormat::json) == to_json(report));
    CHECK(serialize(report, ReportFormat::csv) == to_csv(report));
    CHECK(serialize(report, ReportFormat::json).front() == '{');
    CHECK(serialize(report, ReportFormat::csv).front() == 'M');
}

TEST_CASE("empty report serializes to bare scaffolding") {
    const Report report;
    CHECK(to_csv(report) == "Method,Band,SD,En,SNR,NRMSE,DI,CC\n");
    CHECK(to_json(report) == "{}\n");
}
