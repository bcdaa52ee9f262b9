#pragma once

#include <cstdint>
#include <string>

#include "tacho/minutes.hpp"
#include "tacho/timeline.hpp"

namespace tacho {

/// Driving between two weekly rests: no daily driving time (Strict) or an ordinary one (Spirit).
enum class WeeklyGapPolicy { Strict, Spirit };

/// Which week an extended (9-10 h) daily driving time crossing Sunday 24:00 is charged to.
enum class ExtendedAttribution { StartWeek, EndWeek, MinimizeViolations };

/// A complete set of answers to the questions the regulation leaves open.
struct InterpretationProfile {
    std::string id = "spirit";
    LeapWeekPolicy leap_week_policy = LeapWeekPolicy::Spirit;
    Rule51Semantics rule51 = Rule51Semantics::NeighborRule52;
    WeeklyGapPolicy weekly_gap = WeeklyGapPolicy::Spirit;
    bool trace_edge_is_rest = true;
    ExtendedAttribution extended_attribution = ExtendedAttribution::EndWeek;
    std::int64_t daily_rest_threshold = 9 * 60;  // minutes
    bool attached_compensation = false;
    std::int64_t grid_offset = 0;  // seconds

    friend bool operator==(const InterpretationProfile&, const InterpretationProfile&) = default;

    [[nodiscard]] TimeGrid grid() const { return TimeGrid::with_offset(grid_offset); }
};

}  // namespace tacho
