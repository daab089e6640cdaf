#include "pansharp/fusion.hpp"

#include "pansharp/arithmetic.hpp"
#include "pansharp/filters.hpp"
#include "pansharp/wavelet.hpp"

namespace pansharp {

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = {Method::brovey, Method::cn,  Method::mlt,
                                                Method::hpfa,   Method::hfa, Method::hfm,
                                                Method::wavelet};
    return methods;
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "brovey") return Method::brovey;
    if (name == "cn") return Method::cn;
    if (name == "mlt") return Method::mlt;
    if (name == "hpfa") return Method::hpfa;
    if (name == "hfa") return Method::hfa;
    if (name == "hfm") return Method::hfm;
    if (name == "wavelet") return Method::wavelet;
    return std::nullopt;
}

std::string method_label(Method m) {
    switch (m) {
        case Method::brovey: return "BT";
        case Method::cn: return "CN";
        case Method::mlt: return "MLT";
        case Method::hpfa: return "HPFA";
        case Method::hfa: return "HFA";
        case Method::hfm: return "HFM";
        case Method::wavelet: return "WT";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::brovey: return "brovey";
        case Method::cn: return "cn";
        case Method::mlt: return "mlt";
        case Method::hpfa: return "hpfa";
        case Method::hfa: return "hfa";
        case Method::hfm: return "hfm";
        case Method::wavelet: return "wavelet";
    }
    return "?";
}

Image fuse(Method method, const Image& ms, const Band& pan, const FusionParams& params) {
    switch (method) {
        case Method::brovey: return fuse_brovey(ms, pan);
        case Method::cn: return fuse_color_normalized(ms, pan);
        case Method::mlt: return fuse_multiplicative(ms, pan);
        case Method::hpfa: return fuse_hpfa(ms, pan, params.kernel_size, params.hpf_normalized);
        case Method::hfa: return fuse_hfa(ms, pan, params.kernel_size, params.boost);
        case Method::hfm: return fuse_hfm(ms, pan, params.kernel_size);
        case Method::wavelet: return fuse_wavelet_substitutive(ms, pan, params.levels);
    }
    throw std::invalid_argument("fuse: unknown method");
}

}  // namespace pansharp
