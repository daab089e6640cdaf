#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pansharp/band.hpp"
#include "pansharp/errors.hpp"

namespace pansharp {

// Nearest-neighbor resampling with pixel-center sampling: output pixel (i, j)
// reads source pixel (floor((i + 0.5) * src_h / dst_h), floor((j + 0.5) * src_w / dst_w)).
template <typename Derived>
BandT<typename Derived::Scalar> resample_nearest(const Eigen::ArrayBase<Derived>& src_expr,
                                                 Eigen::Index target_height,
                                                 Eigen::Index target_width) {
    using Scalar = typename Derived::Scalar;
    if (target_height < 1 || target_width < 1)
        throw std::invalid_argument("resample_nearest: target dimensions must be positive");
    const BandT<Scalar> src = src_expr.derived();
    require_nonempty(src, "resample_nearest");

    const Eigen::Index src_h = src.rows(), src_w = src.cols();
    std::vector<Eigen::Index> col_map(static_cast<std::size_t>(target_width));
    for (Eigen::Index j = 0; j < target_width; ++j) {
        auto sj = static_cast<Eigen::Index>(
            std::floor((static_cast<double>(j) + 0.5) * static_cast<double>(src_w) /
                       static_cast<double>(target_width)));
        col_map[static_cast<std::size_t>(j)] = std::min(sj, src_w - 1);
    }
    BandT<Scalar> out(target_height, target_width);
    for (Eigen::Index i = 0; i < target_height; ++i) {
        auto si = static_cast<Eigen::Index>(
            std::floor((static_cast<double>(i) + 0.5) * static_cast<double>(src_h) /
                       static_cast<double>(target_height)));
        si = std::min(si, src_h - 1);
        for (Eigen::Index j = 0; j < target_width; ++j)
            out(i, j) = src(si, col_map[static_cast<std::size_t>(j)]);
    }
    return out;
}

template <typename Scalar>
ImageT<Scalar> resample_nearest(const ImageT<Scalar>& img, Eigen::Index target_height,
                                Eigen::Index target_width) {
    require_same_shape(img, "resample_nearest");
    ImageT<Scalar> out;
    out.reserve(img.size());
    for (const auto& b : img) out.push_back(resample_nearest(b, target_height, target_width));
    return out;
}

struct QuantizationPolicy {
    double lo = 0.0;
    double hi = 255.0;
    // rounding: half away from zero
};

// Clamp to [lo, hi], then round half away from zero.
template <typename Derived>
BandT<typename Derived::Scalar> quantize(const Eigen::ArrayBase<Derived>& expr,
                                         QuantizationPolicy policy = {}) {
    using Scalar = typename Derived::Scalar;
    BandT<Scalar> out = expr.derived();
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            double v = static_cast<double>(out(i, j));
            if (!std::isfinite(v))
                throw invalid_data_error("quantize: non-finite sample at (" + std::to_string(i) +
                                         ", " + std::to_string(j) + ")");
            v = std::min(std::max(v, policy.lo), policy.hi);
            out(i, j) = static_cast<Scalar>(std::round(v));
        }
    }
    return out;
}

template <typename Scalar>
ImageT<Scalar> quantize(const ImageT<Scalar>& img, QuantizationPolicy policy = {}) {
    ImageT<Scalar> out;
    out.reserve(img.size());
    for (const auto& b : img) out.push_back(quantize(b, policy));
    return out;
}

struct Histogram {
    std::array<std::int64_t, 256> counts{};
    std::int64_t total = 0;
};

// Tally of an already quantized band; rejects anything outside {0, ..., 255}.
template <typename Derived>
Histogram histogram256(const Eigen::ArrayBase<Derived>& band_expr) {
    const auto& band = band_expr.derived();
    require_nonempty(band, "histogram256");
    Histogram h;
    for (Eigen::Index i = 0; i < band.rows(); ++i) {
        for (Eigen::Index j = 0; j < band.cols(); ++j) {
            const double v = static_cast<double>(band(i, j));
            if (!(v == std::floor(v)) || v < 0.0 || v > 255.0)
                throw invalid_data_error("histogram256: sample not quantized to {0..255} at (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
            ++h.counts[static_cast<std::size_t>(v)];
            ++h.total;
        }
    }
    return h;
}

// Classical CDF matching: source level v maps to the smallest reference level r
// with CDF_ref(r) >= CDF_src(v). The comparison cross-multiplies totals so it is
// exact in integer arithmetic.
template <typename DerivedS, typename DerivedR>
BandT<typename DerivedS::Scalar> histogram_match(const Eigen::ArrayBase<DerivedS>& source,
                                                 const Eigen::ArrayBase<DerivedR>& reference) {
    using Scalar = typename DerivedS::Scalar;
    require_nonempty(source.derived(), "histogram_match");
    require_nonempty(reference.derived(), "histogram_match");
    const BandT<Scalar> qs = quantize(source);
    const Histogram hs = histogram256(qs);
    const Histogram hr = histogram256(quantize(reference));

    std::array<std::int64_t, 256> cum_s{}, cum_r{};
    std::int64_t acc = 0;
    for (std::size_t v = 0; v < 256; ++v) cum_s[v] = (acc += hs.counts[v]);
    acc = 0;
    for (std::size_t v = 0; v < 256; ++v) cum_r[v] = (acc += hr.counts[v]);

    std::array<Scalar, 256> lut{};
    std::size_t r = 0;
    for (std::size_t v = 0; v < 256; ++v) {
        const auto lhs = static_cast<unsigned __int128>(cum_s[v]) *
                         static_cast<unsigned __int128>(hr.total);
        while (r < 255 && static_cast<unsigned __int128>(cum_r[r]) *
                                  static_cast<unsigned __int128>(hs.total) <
                              lhs)
            ++r;
        lut[v] = static_cast<Scalar>(r);
    }

    BandT<Scalar> out(qs.rows(), qs.cols());
    for (Eigen::Index i = 0; i < qs.rows(); ++i)
        for (Eigen::Index j = 0; j < qs.cols(); ++j)
            out(i, j) = lut[static_cast<std::size_t>(qs(i, j))];
    return out;
}

}  // namespace pansharp
