#pragma once

#include <initializer_list>
#include <utility>

#include "tacho/tacho.hpp"

namespace tacho::testing {

constexpr Activity D = Activity::Driving;
constexpr Activity R = Activity::Rest;
constexpr Activity W = Activity::OtherWork;

constexpr std::int64_t kMin = kSecondsPerMinute;
constexpr std::int64_t kHour = kSecondsPerHour;

/// Runs of (activity, seconds), starting at `start`.
inline SecondTrace runs(std::initializer_list<std::pair<Activity, std::int64_t>> rs, std::int64_t start = 0) {
    SecondTrace t;
    t.start = Instant{start};
    for (auto [a, s] : rs) append(t, a, s);
    return t;
}

inline InterpretationProfile builtin(const std::string& id) { return builtin_profiles().at(id); }

}  // namespace tacho::testing
