#pragma once

#include <algorithm>
#include <stdexcept>

#include "pansharp/band.hpp"

namespace pansharp {

template <typename Scalar>
struct KernelT {
    BandT<Scalar> weights;   // n x n, n odd >= 3
    Scalar normalization;    // factor applied to the accumulated weight sum
};

using Kernel = KernelT<double>;

namespace detail {
inline void check_kernel_size(int n, const char* who) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": kernel size must be odd and >= 3");
}
}  // namespace detail

// Box low-pass: all ones, normalized by 1/n^2.
template <typename Scalar = double>
KernelT<Scalar> make_lowpass_kernel(int n) {
    detail::check_kernel_size(n, "make_lowpass_kernel");
    KernelT<Scalar> k;
    k.weights = BandT<Scalar>::Constant(n, n, Scalar(1));
    k.normalization = Scalar(1) / static_cast<Scalar>(n * n);
    return k;
}

// Box high-pass: off-center weights -1, center n*n - 1. The printed form keeps
// the 1/n^2 prefactor; `normalized = false` drops it.
template <typename Scalar = double>
KernelT<Scalar> make_highpass_kernel(int n, bool normalized = true) {
    detail::check_kernel_size(n, "make_highpass_kernel");
    KernelT<Scalar> k;
    k.weights = BandT<Scalar>::Constant(n, n, Scalar(-1));
    k.weights(n / 2, n / 2) = static_cast<Scalar>(n * n - 1);
    k.normalization = normalized ? Scalar(1) / static_cast<Scalar>(n * n) : Scalar(1);
    return k;
}

// Dense 2-D convolution with replicate borders. The accumulation order is
// row-major over the kernel; that order is part of the contract so results are
// bit-for-bit reproducible.
template <typename Derived>
BandT<typename Derived::Scalar> convolve2d(const Eigen::ArrayBase<Derived>& band_expr,
                                           const KernelT<typename Derived::Scalar>& kernel) {
    using Scalar = typename Derived::Scalar;
    const BandT<Scalar> src = band_expr.derived();
    require_nonempty(src, "convolve2d");
    const auto n = static_cast<int>(kernel.weights.rows());
    if (kernel.weights.cols() != n) throw std::invalid_argument("convolve2d: kernel not square");
    detail::check_kernel_size(n, "convolve2d");

    const Eigen::Index h = src.rows(), w = src.cols();
    const int c = n / 2;
    BandT<Scalar> out(h, w);
    for (Eigen::Index i = 0; i < h; ++i) {
        for (Eigen::Index j = 0; j < w; ++j) {
            Scalar acc = 0;
            for (int u = 0; u < n; ++u) {
                const Eigen::Index r = std::clamp<Eigen::Index>(i + u - c, 0, h - 1);
                for (int v = 0; v < n; ++v) {
                    const Eigen::Index q = std::clamp<Eigen::Index>(j + v - c, 0, w - 1);
                    acc += kernel.weights(u, v) * src(r, q);
                }
            }
            out(i, j) = kernel.normalization * acc;
        }
    }
    return out;
}

template <typename Derived>
BandT<typename Derived::Scalar> lowpass(const Eigen::ArrayBase<Derived>& pan, int n = 3) {
    return convolve2d(pan, make_lowpass_kernel<typename Derived::Scalar>(n));
}

template <typename Derived>
BandT<typename Derived::Scalar> highpass(const Eigen::ArrayBase<Derived>& pan, int n = 3,
                                         bool normalized = true) {
    return convolve2d(pan, make_highpass_kernel<typename Derived::Scalar>(n, normalized));
}

// Unsharp mask: P - lowpass(P).
template <typename Derived>
BandT<typename Derived::Scalar> unsharp_mask(const Eigen::ArrayBase<Derived>& pan, int n = 3) {
    using Scalar = typename Derived::Scalar;
    const BandT<Scalar> p = pan.derived();
    return p - lowpass(p, n);
}

// High boost: a * P - lowpass(P); a = 1 reduces to the unsharp mask.
template <typename Derived>
BandT<typename Derived::Scalar> high_boost(const Eigen::ArrayBase<Derived>& pan,
                                           typename Derived::Scalar a, int n = 3) {
    using Scalar = typename Derived::Scalar;
    if (a < Scalar(0)) throw std::invalid_argument("high_boost: boost factor must be >= 0");
    const BandT<Scalar> p = pan.derived();
    return a * p - lowpass(p, n);
}

}  // namespace pansharp
