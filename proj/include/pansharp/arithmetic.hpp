#pragma once

#include "pansharp/band.hpp"
#include "pansharp/errors.hpp"

namespace pansharp {

// Brovey: F_k = M_k * P / sum(M). Pixels with zero band sum have no spectral
// distribution to preserve and output 0 in every band.
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_brovey(const ImageT<Scalar>& ms, const Eigen::ArrayBase<DerivedP>& pan_expr) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_brovey");
    BandT<Scalar> sum = BandT<Scalar>::Zero(pan.rows(), pan.cols());
    for (const auto& m : ms) sum += m;
    const BandT<Scalar> safe_sum = (sum != Scalar(0)).select(sum, Scalar(1));
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms)
        out.push_back((sum != Scalar(0)).select(m * pan / safe_sum, Scalar(0)));
    return out;
}

// Color Normalized: F_k = (M_k + 1)(P + 1) K / (sum(M) + K) - 1 with K the band
// count; the K = 3 case matches the printed constants.
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_color_normalized(const ImageT<Scalar>& ms,
                                     const Eigen::ArrayBase<DerivedP>& pan_expr) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_color_normalized");
    const auto k = static_cast<Scalar>(ms.size());
    BandT<Scalar> sum = BandT<Scalar>::Zero(pan.rows(), pan.cols());
    for (const auto& m : ms) sum += m;
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms)
        out.push_back((m + Scalar(1)) * (pan + Scalar(1)) * k / (sum + k) - Scalar(1));
    return out;
}

// Multiplicative: F_k = sqrt(M_k * P).
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_multiplicative(const ImageT<Scalar>& ms,
                                   const Eigen::ArrayBase<DerivedP>& pan_expr) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_multiplicative");
    if ((pan < Scalar(0)).any())
        throw invalid_data_error("fuse_multiplicative: negative PAN sample");
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms) {
        if ((m < Scalar(0)).any())
            throw invalid_data_error("fuse_multiplicative: negative MS sample");
        out.push_back((m * pan).sqrt());
    }
    return out;
}

}  // namespace pansharp
