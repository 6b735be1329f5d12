#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "evoo/dataset.hpp"

namespace evoo {

/// Relative spectral change of one (oil, ageing step, excitation) row.
struct REFeature {
    std::string oil_label;
    int ageing_step = 0;      // 1..9
    double excitation_nm = 0.0;
    double value = 0.0;       // >= 0
};

/// Per-oil winner of the step-9 relative-error profile.
struct WavelengthVote {
    std::string oil_label;
    double winning_wavelength_nm = 0.0;
};

/// Outcome of the vote count after +-10 nm equivalence merging.
struct SelectedWavelengths {
    double primary_nm = 0.0;
    double secondary_nm = 0.0;
    std::map<double, int> vote_counts;  // merged counts, winners only
};

/// How replicate spectra enter the relative-error computation.
enum class ReplicateMode { mean, per_replicate };

/// ||reference - aged||^2 / ||reference||^2 over emission pixels.
/// Both vectors are expected to be Rayleigh-masked already.
/// Throws MismatchError on length mismatch, DomainError on a zero-norm
/// reference.
double relative_error(std::span<const double> reference, std::span<const double> aged);

/// Rayleigh-masked, replicate-mean intensity of one (oil, step).
/// Throws NotFoundError when no replicate exists.
Matrix masked_mean_intensity(const Dataset& data, const std::string& oil, int step);

/// Relative error against the oil's fresh reference for every excitation
/// wavelength. Replicates are averaged before the computation (mean mode);
/// per_replicate computes one profile per aged replicate against the mean
/// fresh reference and is exposed via re_profile_replicate.
std::vector<REFeature> re_profile(const Dataset& data, const std::string& oil, int step);
std::vector<REFeature> re_profile_replicate(const Dataset& data, const std::string& oil,
                                            int step, int replicate);

struct VoteResult {
    std::vector<WavelengthVote> votes;
    std::vector<std::string> warnings;  // e.g. degenerate all-zero profiles
};

/// One vote per oil: the excitation wavelength maximizing the step-9
/// relative error, ties broken toward the lower wavelength.
VoteResult vote_wavelengths(const Dataset& data);

/// Merge votes at adjacent grid wavelengths (+-10 nm) into the wavelength
/// holding the larger raw count (ties to the lower wavelength; no
/// transitive chaining), then pick the two most common wavelengths.
/// Throws DomainError on an empty vote list or when fewer than two
/// distinct wavelengths remain.
SelectedWavelengths select_wavelengths(const std::vector<WavelengthVote>& votes);

}  // namespace evoo
