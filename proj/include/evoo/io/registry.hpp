#pragma once

#include <map>
#include <string>
#include <vector>

#include "evoo/dataset.hpp"

namespace evoo::io {

/// Coverage report of a dataset against the full study design:
/// 24 oils x 10 ageing steps x 3 replicates = 720 EEMs.
struct DatasetRegistry {
    struct Gap {
        std::string oil;
        int step;
        int replicate;
    };

    static constexpr int kExpectedEems = 720;

    int present = 0;
    std::vector<Gap> gaps;          // every missing (oil, step, replicate)
    int unexpected = 0;             // samples outside the design
    int uv_present = 0;             // of the expected 240 records
    std::vector<std::string> uv_gaps;

    bool complete() const { return gaps.empty(); }

    static DatasetRegistry scan(const Dataset& data);

    /// Geographic origin per oil label.
    static const std::map<std::string, std::string>& oil_origins();
};

}  // namespace evoo::io
