#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pansharp/band.hpp"
#include "pansharp/errors.hpp"
#include "pansharp/raster.hpp"

// The six quality indices. All accumulations run row-major so results are
// bit-for-bit reproducible.

namespace pansharp {

namespace detail {
template <typename A, typename B>
void require_same_dims(const A& a, const B& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(who) + ": dimensions differ");
}
}  // namespace detail

// Population standard deviation: sqrt(sum((x - mean)^2) / (m * n)).
template <typename Derived>
double std_dev(const Eigen::ArrayBase<Derived>& band_expr) {
    const auto& b = band_expr.derived();
    require_nonempty(b, "std_dev");
    const auto n = static_cast<double>(b.size());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) sum += static_cast<double>(b(i, j));
    const double mean = sum / n;
    double ss = 0.0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            const double d = static_cast<double>(b(i, j)) - mean;
            ss += d * d;
        }
    return std::sqrt(ss / n);
}

// Shannon entropy in bits over the 256-level histogram of a quantized band.
template <typename Derived>
double entropy(const Eigen::ArrayBase<Derived>& band_expr) {
    const Histogram h = histogram256(band_expr);
    double en = 0.0;
    for (const auto count : h.counts) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / static_cast<double>(h.total);
        en -= p * std::log2(p);
    }
    return en;
}

// Pearson correlation coefficient.
template <typename DerivedF, typename DerivedR>
double correlation(const Eigen::ArrayBase<DerivedF>& fused_expr,
                   const Eigen::ArrayBase<DerivedR>& reference_expr) {
    const auto& f = fused_expr.derived();
    const auto& r = reference_expr.derived();
    require_nonempty(f, "correlation");
    detail::require_same_dims(f, r, "correlation");
    const auto n = static_cast<double>(f.size());
    double sf = 0.0, sr = 0.0;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            sf += static_cast<double>(f(i, j));
            sr += static_cast<double>(r(i, j));
        }
    const double mf = sf / n, mr = sr / n;
    double num = 0.0, df2 = 0.0, dr2 = 0.0;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            const double df = static_cast<double>(f(i, j)) - mf;
            const double dr = static_cast<double>(r(i, j)) - mr;
            num += df * dr;
            df2 += df * df;
            dr2 += dr * dr;
        }
    if (df2 == 0.0 || dr2 == 0.0)
        throw degenerate_error("correlation: zero variance band");
    return num / (std::sqrt(df2) * std::sqrt(dr2));
}

// SNR = sqrt(sum(F^2) / sum((F - M)^2)); +infinity when the noise term is zero.
template <typename DerivedF, typename DerivedR>
double snr(const Eigen::ArrayBase<DerivedF>& fused_expr,
           const Eigen::ArrayBase<DerivedR>& reference_expr) {
    const auto& f = fused_expr.derived();
    const auto& r = reference_expr.derived();
    require_nonempty(f, "snr");
    detail::require_same_dims(f, r, "snr");
    double signal = 0.0, noise = 0.0;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            const double fv = static_cast<double>(f(i, j));
            const double d = fv - static_cast<double>(r(i, j));
            signal += fv * fv;
            noise += d * d;
        }
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(signal / noise);
}

// NRMSE = sqrt(sum((F - M)^2) / (n * m * 255^2)).
template <typename DerivedF, typename DerivedR>
double nrmse(const Eigen::ArrayBase<DerivedF>& fused_expr,
             const Eigen::ArrayBase<DerivedR>& reference_expr) {
    const auto& f = fused_expr.derived();
    const auto& r = reference_expr.derived();
    require_nonempty(f, "nrmse");
    detail::require_same_dims(f, r, "nrmse");
    double noise = 0.0;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            const double d = static_cast<double>(f(i, j)) - static_cast<double>(r(i, j));
            noise += d * d;
        }
    return std::sqrt(noise / (static_cast<double>(f.size()) * 255.0 * 255.0));
}

struct DeviationIndexResult {
    double value = 0.0;
    std::int64_t excluded = 0;  // reference pixels <= 0, left out of the mean
};

// DI = mean of |F - M| / M over pixels with M > 0; the divisor is the count of
// included pixels and the excluded count is reported alongside.
template <typename DerivedF, typename DerivedR>
DeviationIndexResult deviation_index(const Eigen::ArrayBase<DerivedF>& fused_expr,
                                     const Eigen::ArrayBase<DerivedR>& reference_expr) {
    const auto& f = fused_expr.derived();
    const auto& r = reference_expr.derived();
    require_nonempty(f, "deviation_index");
    detail::require_same_dims(f, r, "deviation_index");
    double acc = 0.0;
    std::int64_t included = 0;
    DeviationIndexResult res;
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) {
            const double m = static_cast<double>(r(i, j));
            if (m > 0.0) {
                acc += std::abs(static_cast<double>(f(i, j)) - m) / m;
                ++included;
            } else {
                ++res.excluded;
            }
        }
    if (included == 0)
        throw degenerate_error("deviation_index: no reference pixels > 0");
    res.value = acc / static_cast<double>(included);
    return res;
}

// One row of the assessment table. Empty optionals mark cells whose statistic
// is degenerate for the given pair (e.g. correlation against a flat band).
struct BandMetrics {
    std::optional<double> sd, en, snr, nrmse, di, cc;
    std::int64_t di_excluded = 0;
    std::int64_t pixels = 0;
};

// All six indices per band. Entropy always sees quantized data; the remaining
// indices see raw floating-point samples unless `on_quantized` is set.
inline std::vector<BandMetrics> assess(const Image& fused, const Image& reference,
                                       bool on_quantized = false) {
    require_same_shape(fused, "assess");
    require_same_shape(reference, "assess");
    if (fused.size() != reference.size())
        throw std::invalid_argument("assess: band counts differ");
    detail::require_same_dims(fused.front(), reference.front(), "assess");

    std::vector<BandMetrics> rows;
    rows.reserve(fused.size());
    for (std::size_t k = 0; k < fused.size(); ++k) {
        const Band fq = quantize(fused[k]);
        const Band& f = on_quantized ? fq : fused[k];
        const Band r = on_quantized ? quantize(reference[k]) : reference[k];
        BandMetrics bm;
        bm.pixels = static_cast<std::int64_t>(f.size());
        bm.sd = std_dev(f);
        bm.en = entropy(fq);
        bm.snr = snr(f, r);
        bm.nrmse = nrmse(f, r);
        try {
            bm.cc = correlation(f, r);
        } catch (const degenerate_error&) {
        }
        try {
            const auto di = deviation_index(f, r);
            bm.di = di.value;
            bm.di_excluded = di.excluded;
        } catch (const degenerate_error&) {
            bm.di_excluded = bm.pixels;
        }
        rows.push_back(bm);
    }
    return rows;
}

}  // namespace pansharp
