#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "evoo/eem.hpp"
#include "evoo/uvparams.hpp"

namespace evoo {

/// In-memory study data: EEMs indexed by (oil, step, replicate) plus UV
/// records indexed by (oil, step). Iteration order is canonical (sorted
/// keys) regardless of insertion order.
class Dataset {
public:
    using EemKey = std::tuple<std::string, int, int>;
    using UvKey = std::pair<std::string, int>;

    /// All EEMs must share one grid; duplicates are rejected.
    void add_eem(EEM eem);
    void add_uv(UVRecord rec);

    bool has_eem(const std::string& oil, int step, int replicate) const;
    const EEM& eem(const std::string& oil, int step, int replicate) const;
    std::vector<const EEM*> replicates(const std::string& oil, int step) const;

    bool has_uv(const std::string& oil, int step) const;
    const UVRecord& uv(const std::string& oil, int step) const;

    /// Sorted unique oil labels appearing in the EEM index.
    std::vector<std::string> oils() const;
    /// Sorted ageing steps present for one oil.
    std::vector<int> steps(const std::string& oil) const;

    /// Grid shared by all EEMs; null while empty.
    const WavelengthGrid* grid() const;

    std::size_t n_eems() const { return eems_.size(); }
    std::size_t n_uv() const { return uv_.size(); }
    const std::map<EemKey, EEM>& eems() const { return eems_; }
    const std::map<UvKey, UVRecord>& uv_records() const { return uv_; }

private:
    std::map<EemKey, EEM> eems_;
    std::map<UvKey, UVRecord> uv_;
};

}  // namespace evoo
