#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pansharp/band.hpp"
#include "pansharp/raster.hpp"

namespace pansharp {

// Orthonormal Haar taps: lowpass (1, 1)/sqrt(2), highpass (1, -1)/sqrt(2).

template <typename Scalar>
struct HaarPlanesT {
    BandT<Scalar> a, h, v, d;  // approximation, horizontal, vertical, diagonal
    Eigen::Index pad_rows = 0, pad_cols = 0;  // replicate padding applied before analysis
};

template <typename Scalar>
struct WaveletLevelT {
    BandT<Scalar> h, v, d;
    Eigen::Index pad_rows = 0, pad_cols = 0;
};

template <typename Scalar>
struct WaveletPyramidT {
    BandT<Scalar> approx;                       // coarsest approximation A^N
    std::vector<WaveletLevelT<Scalar>> levels;  // levels[0] is the finest
};

using HaarPlanes = HaarPlanesT<double>;
using WaveletPyramid = WaveletPyramidT<double>;

// Number of analysis steps possible before every plane collapses to 1x1.
inline int max_wavelet_levels(Eigen::Index rows, Eigen::Index cols) {
    int n = 0;
    while (rows > 1 || cols > 1) {
        rows = (rows + 1) / 2;
        cols = (cols + 1) / 2;
        ++n;
    }
    return n;
}

// One separable analysis step. Odd extents are replicate-padded to even first,
// recorded so synthesis can strip them; even-indexed outputs are kept.
template <typename Derived>
HaarPlanesT<typename Derived::Scalar> haar_analyze_level(const Eigen::ArrayBase<Derived>& band_expr) {
    using Scalar = typename Derived::Scalar;
    const Scalar is2 = Scalar(1) / static_cast<Scalar>(std::numbers::sqrt2);
    BandT<Scalar> x = band_expr.derived();
    require_nonempty(x, "haar_analyze_level");

    HaarPlanesT<Scalar> out;
    out.pad_rows = x.rows() % 2;
    out.pad_cols = x.cols() % 2;
    if (out.pad_rows || out.pad_cols) {
        BandT<Scalar> padded(x.rows() + out.pad_rows, x.cols() + out.pad_cols);
        padded.topLeftCorner(x.rows(), x.cols()) = x;
        if (out.pad_rows) padded.row(padded.rows() - 1) = padded.row(padded.rows() - 2);
        if (out.pad_cols) padded.col(padded.cols() - 1) = padded.col(padded.cols() - 2);
        x = std::move(padded);
    }

    const Eigen::Index h2 = x.rows(), w2 = x.cols();
    BandT<Scalar> row_lo(h2, w2 / 2), row_hi(h2, w2 / 2);
    for (Eigen::Index i = 0; i < h2; ++i) {
        for (Eigen::Index k = 0; k < w2 / 2; ++k) {
            row_lo(i, k) = (x(i, 2 * k) + x(i, 2 * k + 1)) * is2;
            row_hi(i, k) = (x(i, 2 * k) - x(i, 2 * k + 1)) * is2;
        }
    }
    auto column_pass = [&](const BandT<Scalar>& q, BandT<Scalar>& lo, BandT<Scalar>& hi) {
        lo.resize(h2 / 2, q.cols());
        hi.resize(h2 / 2, q.cols());
        for (Eigen::Index r = 0; r < h2 / 2; ++r) {
            for (Eigen::Index k = 0; k < q.cols(); ++k) {
                lo(r, k) = (q(2 * r, k) + q(2 * r + 1, k)) * is2;
                hi(r, k) = (q(2 * r, k) - q(2 * r + 1, k)) * is2;
            }
        }
    };
    column_pass(row_lo, out.a, out.h);  // A = LL, H = LH (horizontal detail)
    column_pass(row_hi, out.v, out.d);  // V = HL, D = HH
    return out;
}

// Exact inverse of haar_analyze_level.
template <typename Scalar>
BandT<Scalar> haar_synthesize_level(const BandT<Scalar>& a, const BandT<Scalar>& h,
                                    const BandT<Scalar>& v, const BandT<Scalar>& d,
                                    Eigen::Index pad_rows = 0, Eigen::Index pad_cols = 0) {
    const Scalar is2 = Scalar(1) / static_cast<Scalar>(std::numbers::sqrt2);
    for (const BandT<Scalar>* p : {&h, &v, &d})
        if (p->rows() != a.rows() || p->cols() != a.cols())
            throw std::invalid_argument("haar_synthesize_level: plane dimensions differ");
    require_nonempty(a, "haar_synthesize_level");

    const Eigen::Index hr = a.rows(), wc = a.cols();
    BandT<Scalar> row_lo(2 * hr, wc), row_hi(2 * hr, wc);
    for (Eigen::Index r = 0; r < hr; ++r) {
        for (Eigen::Index k = 0; k < wc; ++k) {
            row_lo(2 * r, k) = (a(r, k) + h(r, k)) * is2;
            row_lo(2 * r + 1, k) = (a(r, k) - h(r, k)) * is2;
            row_hi(2 * r, k) = (v(r, k) + d(r, k)) * is2;
            row_hi(2 * r + 1, k) = (v(r, k) - d(r, k)) * is2;
        }
    }
    BandT<Scalar> x(2 * hr, 2 * wc);
    for (Eigen::Index i = 0; i < 2 * hr; ++i) {
        for (Eigen::Index k = 0; k < wc; ++k) {
            x(i, 2 * k) = (row_lo(i, k) + row_hi(i, k)) * is2;
            x(i, 2 * k + 1) = (row_lo(i, k) - row_hi(i, k)) * is2;
        }
    }
    if (pad_rows || pad_cols)
        return x.topLeftCorner(x.rows() - pad_rows, x.cols() - pad_cols).eval();
    return x;
}

template <typename Derived>
WaveletPyramidT<typename Derived::Scalar> decompose(const Eigen::ArrayBase<Derived>& band_expr,
                                                    int levels) {
    using Scalar = typename Derived::Scalar;
    BandT<Scalar> cur = band_expr.derived();
    require_nonempty(cur, "decompose");
    if (levels < 1) throw std::invalid_argument("decompose: levels must be >= 1");
    const int feasible = max_wavelet_levels(cur.rows(), cur.cols());
    if (levels > feasible)
        throw std::invalid_argument("decompose: " + std::to_string(levels) +
                                    " levels requested but at most " + std::to_string(feasible) +
                                    " feasible for a " + std::to_string(cur.rows()) + "x" +
                                    std::to_string(cur.cols()) + " band");
    WaveletPyramidT<Scalar> pyr;
    for (int l = 0; l < levels; ++l) {
        auto planes = haar_analyze_level(cur);
        pyr.levels.push_back({std::move(planes.h), std::move(planes.v), std::move(planes.d),
                              planes.pad_rows, planes.pad_cols});
        cur = std::move(planes.a);
    }
    pyr.approx = std::move(cur);
    return pyr;
}

template <typename Scalar>
BandT<Scalar> reconstruct(const WaveletPyramidT<Scalar>& pyr) {
    if (pyr.levels.empty()) throw std::invalid_argument("reconstruct: empty pyramid");
    BandT<Scalar> cur = pyr.approx;
    for (auto it = pyr.levels.rbegin(); it != pyr.levels.rend(); ++it) {
        if (cur.rows() != it->h.rows() || cur.cols() != it->h.cols())
            throw std::invalid_argument("reconstruct: inconsistent pyramid dimensions");
        cur = haar_synthesize_level(cur, it->h, it->v, it->d, it->pad_rows, it->pad_cols);
    }
    return cur;
}

// Substitutive wavelet fusion: per band, histogram-match PAN to the band, keep
// the band's approximation plane and take every detail plane from the matched
// PAN, then invert.
template <typename Scalar, typename DerivedP>
ImageT<Scalar> fuse_wavelet_substitutive(const ImageT<Scalar>& ms,
                                         const Eigen::ArrayBase<DerivedP>& pan_expr,
                                         int levels = 1) {
    const BandT<Scalar> pan = pan_expr.derived();
    require_fusion_shapes(ms, pan, "fuse_wavelet_substitutive");
    ImageT<Scalar> out;
    out.reserve(ms.size());
    for (const auto& m : ms) {
        const BandT<Scalar> matched = histogram_match(pan, m);
        WaveletPyramidT<Scalar> fused = decompose(matched, levels);
        fused.approx = decompose(m, levels).approx;
        out.push_back(reconstruct(fused));
    }
    return out;
}

}  // namespace pansharp
