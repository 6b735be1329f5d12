#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evoo/dataset.hpp"
#include "evoo/eem.hpp"
#include "evoo/uvparams.hpp"

namespace evoo::synth {

/// Generator configuration with analytically known ground truth. Ageing
/// multiplies one Gaussian emission band of the designated excitation row
/// by (1 + change_rate * step); the UV coefficients ramp linearly in the
/// ageing step and touch their limits exactly at the flip step, so the
/// conservative boundary rule makes labels 1 below the flip step and 0 from
/// it on.
struct SynthSpec {
    int n_oils = 24;                         // labelled A.. (max 24)
    int n_replicates = 3;
    WavelengthGrid grid = WavelengthGrid::instrument_default();
    double designated_wavelength_nm = 450.0;
    double change_rate = 0.2;                // per ageing step
    std::vector<int> label_flip_steps;       // one per oil, or one broadcast value
    double noise_sigma = 0.0;                // additive, truncated at zero
    std::uint64_t rng_seed = 0;
};

struct SynthTruth {
    std::map<std::string, double> designated_nm;              // per oil
    std::map<std::pair<std::string, int>, int> expected_class;  // (oil, step) -> 0/1
};

struct SynthResult {
    Dataset data;
    SynthTruth truth;
};

/// Deterministic per seed; per-oil noise streams are derived from the seed
/// so oils may be generated concurrently. Throws DomainError on an invalid
/// spec (off-grid wavelength, flip step outside 1..9, ...).
SynthResult generate(const SynthSpec& spec);

/// Writes the generated dataset as canonical eem.csv / uv.csv under `dir`.
void write_dataset(const SynthResult& result, const std::string& dir);

}  // namespace evoo::synth
