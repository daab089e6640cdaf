#pragma once

#include "pansharp/band.hpp"
#include "pansharp/kernels.hpp"

namespace pansharp {

// Below this value the low-pass denominator counts as flat and the modulation
// ratio falls back to 1 (no modulation).
inline constexpr double kHfmEpsilon = 1e-9;

// HPFA: F_k = (M_k + highpass(P)) / 2.
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_hpfa(const ImageT<Scalar>& ms, const Eigen::ArrayBase<DerivedP>& pan_expr,
                         int n = 3, bool hpf_normalized = true) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_hpfa");
    const BandT<Scalar> hp = highpass(pan, n, hpf_normalized);
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back((m + hp) / Scalar(2));
    return out;
}

// HFA: F_k = M_k + detail(P); detail is the unsharp mask at boost = 1 and the
// high-boost generalization otherwise.
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_hfa(const ImageT<Scalar>& ms, const Eigen::ArrayBase<DerivedP>& pan_expr,
                        int n = 3, Scalar boost = Scalar(1)) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_hfa");
    const BandT<Scalar> detail = high_boost(pan, boost, n);
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m + detail);
    return out;
}

// HFM: F_k = M_k * P / lowpass(P), with the flat-denominator guard above.
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_hfm(const ImageT<Scalar>& ms, const Eigen::ArrayBase<DerivedP>& pan_expr,
                        int n = 3) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_hfm");
    const BandT<Scalar> lp = lowpass(pan, n);
    BandT<Scalar> ratio(pan.rows(), pan.cols());
    for (Eigen::Index i = 0; i < pan.rows(); ++i)
        for (Eigen::Index j = 0; j < pan.cols(); ++j)
            ratio(i, j) = lp(i, j) < static_cast<Scalar>(kHfmEpsilon)
                              ? Scalar(1)
                              : pan(i, j) / lp(i, j);
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m * ratio);
    return out;
}

}  // namespace pansharp
