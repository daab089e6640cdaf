#pragma once

#include <cstdint>
#include <vector>

#include "pansharp/band.hpp"
#include "pansharp/fusion.hpp"
#include "pansharp/report.hpp"

namespace pansharp {

// Degrade-and-compare experiment: derive a synthetic PAN and a degraded MS
// from a full-resolution reference, fuse with every method, and score each
// result against the untouched reference.
struct ExperimentConfig {
    int factor = 5;                // resolution ratio between PAN and MS
    int blur_size = 0;             // box blur width before decimation; 0 = smallest odd >= factor
    std::uint64_t seed = 1;        // phase/frequency seed for the mismatch fields
    double mismatch = 1.0;         // acquisition mismatch strength; 0 = ideal PAN (pure band mean)
    FusionParams params;
    bool metrics_on_quantized = false;
    std::vector<Method> methods;   // empty = all seven
};

// Synthetic PAN: the unweighted mean of the reference bands, pushed through a
// seeded cross-sensor model (smooth gain and offset fields, saturation, tone
// curve) scaled by `mismatch`. With mismatch = 0 the mean is returned as-is.
Band synthesize_pan(const Image& reference, std::uint64_t seed, double mismatch);

// Box blur, decimate by `factor` (pixel-center sampling), then nearest-neighbor
// upsample back to the reference size.
Image degrade_ms(const Image& reference, int factor, int blur_size = 0);

// Full report: ORIGIN row (SD/En of the reference) followed by one row block
// per method in canonical order.
Report run_experiment(const Image& reference, const ExperimentConfig& config = {});

}  // namespace pansharp
