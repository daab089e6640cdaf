#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace pansharp {

// One raster band: row-major so sample order matches file payload order.
template <typename Scalar>
using BandT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Band = BandT<double>;

// A multi-band image is an ordered list of equally sized bands.
template <typename Scalar>
using ImageT = std::vector<BandT<Scalar>>;

using Image = ImageT<double>;

template <typename Derived>
void require_nonempty(const Eigen::ArrayBase<Derived>& band, const char* who) {
    if (band.rows() < 1 || band.cols() < 1)
        throw std::invalid_argument(std::string(who) + ": empty band");
}

template <typename Scalar>
void require_same_shape(const ImageT<Scalar>& img, const char* who) {
    if (img.empty())
        throw std::invalid_argument(std::string(who) + ": image has no bands");
    for (const auto& b : img) {
        require_nonempty(b, who);
        if (b.rows() != img.front().rows() || b.cols() != img.front().cols())
            throw std::invalid_argument(std::string(who) + ": bands differ in size");
    }
}

// Fusion precondition: resampling already happened, PAN and MS geometry agree.
template <typename Scalar>
void require_fusion_shapes(const ImageT<Scalar>& ms, const BandT<Scalar>& pan, const char* who) {
    require_same_shape(ms, who);
    require_nonempty(pan, who);
    if (pan.rows() != ms.front().rows() || pan.cols() != ms.front().cols())
        throw std::invalid_argument(std::string(who) + ": PAN and MS dimensions differ");
}

template <typename Derived>
bool all_finite(const Eigen::ArrayBase<Derived>& band) {
    return band.isFinite().all();
}

}  // namespace pansharp
