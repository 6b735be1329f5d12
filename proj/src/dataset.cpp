#include "evoo/dataset.hpp"

#include <string>

#include "evoo/errors.hpp"

namespace evoo {

namespace {

std::string key_str(const std::string& oil, int step, int replicate) {
    return "(" + oil + ", step " + std::to_string(step) + ", replicate " +
           std::to_string(replicate) + ")";
}

}  // namespace

void Dataset::add_eem(EEM eem) {
    if (!eems_.empty() && eem.grid() != eems_.begin()->second.grid()) {
        throw MismatchError("EEM grid differs from the dataset grid");
    }
    const auto& m = eem.meta();
    EemKey key{m.oil_label, m.ageing_step, m.replicate};
    if (eems_.contains(key)) {
        throw DomainError("duplicate EEM " + key_str(m.oil_label, m.ageing_step, m.replicate));
    }
    eems_.emplace(std::move(key), std::move(eem));
}

void Dataset::add_uv(UVRecord rec) {
    UvKey key{rec.oil_label, rec.ageing_step};
    if (uv_.contains(key)) {
        throw DomainError("duplicate UV record (" + rec.oil_label + ", step " +
                          std::to_string(rec.ageing_step) + ")");
    }
    uv_.emplace(std::move(key), std::move(rec));
}

bool Dataset::has_eem(const std::string& oil, int step, int replicate) const {
    return eems_.contains({oil, step, replicate});
}

const EEM& Dataset::eem(const std::string& oil, int step, int replicate) const {
    auto it = eems_.find({oil, step, replicate});
    if (it == eems_.end()) {
        throw NotFoundError("no EEM " + key_str(oil, step, replicate));
    }
    return it->second;
}

std::vector<const EEM*> Dataset::replicates(const std::string& oil, int step) const {
    std::vector<const EEM*> out;
    for (auto it = eems_.lower_bound({oil, step, 0});
         it != eems_.end() && std::get<0>(it->first) == oil && std::get<1>(it->first) == step;
         ++it) {
        out.push_back(&it->second);
    }
    return out;
}

bool Dataset::has_uv(const std::string& oil, int step) const {
    return uv_.contains({oil, step});
}

const UVRecord& Dataset::uv(const std::string& oil, int step) const {
    auto it = uv_.find({oil, step});
    if (it == uv_.end()) {
        throw NotFoundError("no UV record (" + oil + ", step " + std::to_string(step) + ")");
    }
    return it->second;
}

std::vector<std::string> Dataset::oils() const {
    std::vector<std::string> out;
    for (const auto& [key, eem] : eems_) {
        if (out.empty() || out.back() != std::get<0>(key)) {
            out.push_back(std::get<0>(key));
        }
    }
    return out;
}

std::vector<int> Dataset::steps(const std::string& oil) const {
    std::vector<int> out;
    for (auto it = eems_.lower_bound({oil, 0, 0});
         it != eems_.end() && std::get<0>(it->first) == oil; ++it) {
        if (out.empty() || out.back() != std::get<1>(it->first)) {
            out.push_back(std::get<1>(it->first));
        }
    }
    return out;
}

const WavelengthGrid* Dataset::grid() const {
    return eems_.empty() ? nullptr : &eems_.begin()->second.grid();
}

}  // namespace evoo
