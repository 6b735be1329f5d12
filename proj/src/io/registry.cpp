#include "evoo/io/registry.hpp"

namespace evoo::io {

DatasetRegistry DatasetRegistry::scan(const Dataset& data) {
    DatasetRegistry reg;
    for (char oil = 'A'; oil <= 'X'; ++oil) {
        const std::string label(1, oil);
        for (int step = 0; step < kNumSteps; ++step) {
            for (int rep = 1; rep <= kNumReplicates; ++rep) {
                if (data.has_eem(label, step, rep)) {
                    reg.present += 1;
                } else {
                    reg.gaps.push_back({label, step, rep});
                }
            }
            if (data.has_uv(label, step)) {
                reg.uv_present += 1;
            } else {
                reg.uv_gaps.push_back("(" + label + ", step " + std::to_string(step) + ")");
            }
        }
    }
    reg.unexpected = static_cast<int>(data.n_eems()) - reg.present;
    return reg;
}

const std::map<std::string, std::string>& DatasetRegistry::oil_origins() {
    static const std::map<std::string, std::string> origins{
        {"A", "IT"}, {"B", "ES"}, {"C", "IT"}, {"D", "IT"}, {"E", "IT"}, {"F", "IT"},
        {"G", "ES"}, {"H", "GR"}, {"I", "IT"}, {"J", "ES"}, {"K", "GR"}, {"L", "ES"},
        {"M", "EU"}, {"N", "PT"}, {"O", "ES"}, {"P", "GR"}, {"Q", "ES"}, {"R", "GR"},
        {"S", "IT"}, {"T", "IT"}, {"U", "ES"}, {"V", "IT"}, {"W", "IT"}, {"X", "IT/ES/GR"},
    };
    return origins;
}

}  // namespace evoo::io
