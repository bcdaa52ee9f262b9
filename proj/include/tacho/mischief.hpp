#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tacho/engine.hpp"
#include "tacho/minutes.hpp"
#include "tacho/profiles.hpp"
#include "tacho/timeline.hpp"

namespace tacho {

/// `n` blocks of drive, stand still, drive; starts at instant 0.
inline SecondTrace gen_pattern(std::int64_t n, std::int64_t drive_s, std::int64_t rest_s) {
    if (n <= 0 || drive_s <= 0 || rest_s <= 0) throw std::invalid_argument("gen_pattern: parameters must be positive");
    SecondTrace t;
    t.samples.reserve(static_cast<std::size_t>(n * (2 * drive_s + rest_s)));
    for (std::int64_t i = 0; i < n; ++i) {
        append(t, Activity::Driving, drive_s);
        append(t, Activity::Rest, rest_s);
        append(t, Activity::Driving, drive_s);
    }
    return t;
}

inline SecondTrace driving_pattern_1() { return gen_pattern(1, 3600, 60); }
inline SecondTrace driving_pattern_2() { return gen_pattern(1, 3600, 120); }
inline SecondTrace driving_pattern_3() { return gen_pattern(1, 60, 120); }
inline SecondTrace driving_pattern_4() { return gen_pattern(135, 60, 120); }

/// Weekly rest, then three stints of 4.5 h driving separated by 45 min breaks, then another
/// weekly rest: 13.5 h of driving with no daily rest on either side.
inline SecondTrace gen_weekly_sandwich() {
    constexpr std::int64_t h = kSecondsPerHour;
    constexpr std::int64_t m = kSecondsPerMinute;
    SecondTrace t;
    append(t, Activity::Rest, 45 * h);
    append(t, Activity::Driving, 270 * m);
    append(t, Activity::Rest, 45 * m);
    append(t, Activity::Driving, 270 * m);
    append(t, Activity::Rest, 45 * m);
    append(t, Activity::Driving, 270 * m);
    append(t, Activity::Rest, 45 * h);
    return t;
}

// ---------------------------------------------------------------------------
// Minute grid phase

struct ShiftDivergence {
    std::int64_t offset_a = 0;
    std::int64_t offset_b = 0;
    std::int64_t driving_a = 0;
    std::int64_t driving_b = 0;
    std::int64_t peak_a = 0;
    std::int64_t peak_b = 0;
    std::size_t article7_a = 0;
    std::size_t article7_b = 0;

    /// The Art. 7 verdicts disagree.
    [[nodiscard]] bool divergent() const { return (article7_a == 0) != (article7_b == 0); }
};

/// Runs the full engine on two minute grids and compares the Art. 7 verdicts.
inline ShiftDivergence verify_shift_divergence(const SecondTrace& trace, std::int64_t offset_a, std::int64_t offset_b,
                                               InterpretationProfile base = builtin_profiles().at("spirit")) {
    ShiftDivergence d{offset_a, offset_b};
    base.grid_offset = offset_a;
    const auto ra = check_all(trace, base);
    base.grid_offset = offset_b;
    const auto rb = check_all(trace, base);
    d.driving_a = ra.stats.driving_minutes;
    d.driving_b = rb.stats.driving_minutes;
    d.peak_a = ra.stats.peak_driving_period;
    d.peak_b = rb.stats.peak_driving_period;
    d.article7_a = ra.violations_for("7").size();
    d.article7_b = rb.violations_for("7").size();
    return d;
}

struct ShiftWitness {
    SecondTrace trace;
    Activity outer = Activity::Driving;  // activity of the two runs around the middle run
    std::int64_t head = 0;               // seconds of `outer` at the start of each minute
    std::int64_t middle = 0;             // seconds of the other activity
    std::int64_t tail = 0;               // seconds of `outer` at the end of each minute
    ShiftDivergence verdicts;
};

namespace detail {

inline SecondTrace periodic_minutes(Activity outer, std::int64_t head, std::int64_t middle, std::int64_t tail,
                                    std::int64_t minutes) {
    const Activity inner = outer == Activity::Driving ? Activity::Rest : Activity::Driving;
    SecondTrace t;
    t.samples.reserve(static_cast<std::size_t>(minutes * kSecondsPerMinute));
    for (std::int64_t i = 0; i < minutes; ++i) {
        append(t, outer, head);
        append(t, inner, middle);
        append(t, outer, tail);
    }
    return t;
}

}  // namespace detail

/// Searches minute-periodic recordings of the form (outer, inner, outer) for one whose Art. 7
/// verdict depends on the phase of the minute grid.
///
/// The longest-run rule sees the two outer runs separately on one grid and, when the other grid
/// cuts through the middle run, as a single merged run on the other. The witness lasts
/// `min(max_minutes, 300)` minutes.
inline ShiftWitness find_shift_divergent(std::int64_t offset_a = 0, std::int64_t offset_b = 27,
                                         std::int64_t max_minutes = 300) {
    const std::int64_t minutes = std::min<std::int64_t>(max_minutes, 300);
    if (minutes <= kMaxDrivingPeriod) throw std::invalid_argument("find_shift_divergent: bound too small for Art. 7");

    for (Activity outer : {Activity::Driving, Activity::Rest}) {
        for (std::int64_t middle = 1; middle <= 58; ++middle) {
            for (std::int64_t head = 1; head + middle <= 59; ++head) {
                const std::int64_t tail = kSecondsPerMinute - head - middle;
                // cheap pre-filter on three periods before running the engine
                const auto probe = detail::periodic_minutes(outer, head, middle, tail, 3);
                const auto la = label_rule52(probe, TimeGrid::with_offset(offset_a));
                const auto lb = label_rule52(probe, TimeGrid::with_offset(offset_b));
                if (la.labels.at(1) == lb.labels.at(1)) continue;

                auto trace = detail::periodic_minutes(outer, head, middle, tail, minutes);
                auto v = verify_shift_divergence(trace, offset_a, offset_b);
                if (v.divergent()) return {std::move(trace), outer, head, middle, tail, v};
            }
        }
    }
    throw std::runtime_error("find_shift_divergent: no divergent pattern within the bound");
}

// ---------------------------------------------------------------------------
// Weekly rest compensation chains

inline constexpr std::int64_t kMaxChainDepth = 50;

/// k+3 weeks of other work with one weekly rest per week, each starting Wednesday 00:00.
///
/// Week 0 holds a 24 h reduced rest and week k a 66 h rest; every other week has exactly 45 h.
/// The 21 h debt of week 0 can only be paid out of the 45 h rest two or three weeks later,
/// which shrinks it to 24 h so it owes 21 h itself, and so on until the chain reaches week k,
/// whose rest pays and still keeps 45 h. Paying out of the adjacent week leaves a pair of weeks
/// without a regular rest.
inline SecondTrace gen_compensation_chain(std::int64_t k) {
    if (k < 2) throw std::invalid_argument("gen_compensation_chain: depth must be at least 2");
    if (k > kMaxChainDepth) throw std::invalid_argument("gen_compensation_chain: depth exceeds trace-size limit");

    auto rest_hours = [&](std::int64_t w) -> std::int64_t {
        if (w == 0) return 24;
        if (w == k) return 66;
        return 45;
    };

    SecondTrace t;
    t.samples.reserve(static_cast<std::size_t>((k + 3) * kSecondsPerWeek));
    for (std::int64_t w = 0; w < k + 3; ++w) {
        const auto rest = rest_hours(w) * kSecondsPerHour;
        append(t, Activity::OtherWork, 2 * kSecondsPerDay);
        append(t, Activity::Rest, rest);
        append(t, Activity::OtherWork, 5 * kSecondsPerDay - rest);
    }
    return t;
}

/// The first `weeks` weeks of a trace that starts on a week boundary.
inline SecondTrace truncate_weeks(const SecondTrace& trace, std::int64_t weeks) {
    const auto n = std::min<std::int64_t>(trace.size(), weeks * kSecondsPerWeek);
    return SecondTrace{trace.start, {trace.samples.begin(), trace.samples.begin() + n}};
}

}  // namespace tacho
