#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pansharp/band.hpp"

namespace pansharp {

enum class Method { brovey, cn, mlt, hpfa, hfa, hfm, wavelet };

// All seven methods in report order.
const std::vector<Method>& all_methods();

std::optional<Method> parse_method(const std::string& name);

// Table label for a method ("BT", "CN", "MLT", "HPFA", "HFA", "HFM", "WT").
std::string method_label(Method m);

// CLI-facing name ("brovey", "cn", ...).
std::string method_name(Method m);

struct FusionParams {
    int kernel_size = 3;       // odd, >= 3
    int levels = 1;            // wavelet decomposition depth
    double boost = 1.0;        // high-boost factor for HFA; 1 = unsharp mask
    bool hpf_normalized = true;
};

Image fuse(Method method, const Image& ms, const Band& pan, const FusionParams& params = {});

}  // namespace pansharp
