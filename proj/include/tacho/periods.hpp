#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "tacho/minutes.hpp"
#include "tacho/profile.hpp"
#include "tacho/timeline.hpp"

namespace tacho {

// Durations in minutes.
inline constexpr std::int64_t kMinBreak = 15;
inline constexpr std::int64_t kSplitBreakSecondPart = 30;
inline constexpr std::int64_t kFullBreak = 45;
inline constexpr std::int64_t kMaxDrivingPeriod = 270;
inline constexpr std::int64_t kReducedWeeklyRest = 24 * 60;
inline constexpr std::int64_t kRegularWeeklyRest = 45 * 60;

enum class PeriodKind { Break, DailyRest, WeeklyRestReduced, WeeklyRestRegular };

inline std::string_view to_string(PeriodKind k) {
    switch (k) {
    case PeriodKind::Break: return "break";
    case PeriodKind::DailyRest: return "daily_rest";
    case PeriodKind::WeeklyRestReduced: return "weekly_rest_reduced";
    case PeriodKind::WeeklyRestRegular: return "weekly_rest_regular";
    }
    return "?";
}

/// A maximal run of rest minutes, classified by length.
///
/// A run long enough to be a weekly rest is only a weekly rest; a daily rest extended into a
/// weekly rest stops being a daily rest.
struct Period {
    PeriodKind kind = PeriodKind::Break;
    Instant start;
    Instant end;
    std::int64_t first_minute = 0;  // index into the minute trace
    std::int64_t minutes = 0;

    [[nodiscard]] std::int64_t last_minute() const { return first_minute + minutes - 1; }
    [[nodiscard]] bool is_rest_period() const { return kind != PeriodKind::Break; }
    [[nodiscard]] bool is_weekly() const {
        return kind == PeriodKind::WeeklyRestReduced || kind == PeriodKind::WeeklyRestRegular;
    }

    friend bool operator==(const Period&, const Period&) = default;
};

struct RestRun {
    std::int64_t first_minute = 0;
    std::int64_t minutes = 0;
};

/// All maximal runs of Rest-labelled minutes, unclassified.
inline std::vector<RestRun> rest_runs(const MinuteTrace& mt) {
    std::vector<RestRun> runs;
    std::int64_t i = 0;
    const auto n = mt.size();
    while (i < n) {
        if (mt.labels[static_cast<std::size_t>(i)] != Activity::Rest) {
            ++i;
            continue;
        }
        std::int64_t j = i;
        while (j < n && mt.labels[static_cast<std::size_t>(j)] == Activity::Rest) ++j;
        runs.push_back({i, j - i});
        i = j;
    }
    return runs;
}

inline std::optional<PeriodKind> classify_rest_length(std::int64_t minutes, std::int64_t daily_threshold) {
    if (minutes >= kRegularWeeklyRest) return PeriodKind::WeeklyRestRegular;
    if (minutes >= kReducedWeeklyRest) return PeriodKind::WeeklyRestReduced;
    if (minutes >= daily_threshold) return PeriodKind::DailyRest;
    if (minutes >= kMinBreak) return PeriodKind::Break;
    return std::nullopt;
}

/// Classifies every maximal rest run; runs shorter than a break are omitted.
inline std::vector<Period> classify_rests(const MinuteTrace& mt, const InterpretationProfile& profile) {
    std::vector<Period> out;
    for (const auto& r : rest_runs(mt)) {
        auto kind = classify_rest_length(r.minutes, profile.daily_rest_threshold);
        if (!kind) continue;
        out.push_back(Period{*kind, mt.minute_start(r.first_minute), mt.minute_start(r.first_minute + r.minutes),
                             r.first_minute, r.minutes});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Driving periods

struct AccumulatorSample {
    std::int64_t minute = 0;  // index into the minute trace
    Instant at;               // end of that minute
    std::int64_t driving = 0; // accumulated driving minutes after the minute
};

/// Running total of driving since the last qualifying break, one sample per minute.
///
/// The total resets when a break of 45 minutes or a rest period completes, or when a break of at
/// least 30 minutes completes after an earlier break of at least 15 minutes. A 15-minute break on
/// its own resets nothing; driving between the two parts keeps accumulating.
inline std::vector<AccumulatorSample> accumulate_driving(const MinuteTrace& mt, const std::vector<Period>& rests) {
    std::map<std::int64_t, const Period*> by_last;
    for (const auto& p : rests) by_last[p.last_minute()] = &p;

    std::vector<AccumulatorSample> out;
    out.reserve(mt.labels.size());
    std::int64_t acc = 0;
    bool pending_first_part = false;
    for (std::int64_t i = 0; i < mt.size(); ++i) {
        if (mt.labels[static_cast<std::size_t>(i)] == Activity::Driving) ++acc;
        if (auto it = by_last.find(i); it != by_last.end()) {
            const Period& p = *it->second;
            const bool full = p.is_rest_period() || p.minutes >= kFullBreak;
            const bool completes_split = pending_first_part && p.minutes >= kSplitBreakSecondPart;
            if (full || completes_split) {
                acc = 0;
                pending_first_part = false;
            } else {
                pending_first_part = true;
            }
        }
        out.push_back({i, mt.minute_start(i + 1), acc});
    }
    return out;
}

inline std::int64_t peak(const std::vector<AccumulatorSample>& samples) {
    std::int64_t m = 0;
    for (const auto& s : samples) m = std::max(m, s.driving);
    return m;
}

// ---------------------------------------------------------------------------
// Daily driving time

enum class SpanBound { TraceEdge, DailyRest, WeeklyRest };

inline std::string_view to_string(SpanBound b) {
    switch (b) {
    case SpanBound::TraceEdge: return "trace_edge";
    case SpanBound::DailyRest: return "daily_rest";
    case SpanBound::WeeklyRest: return "weekly_rest";
    }
    return "?";
}

struct DailyDrivingSpan {
    Instant start;
    Instant end;
    std::int64_t first_minute = 0;
    std::int64_t end_minute = 0;  // exclusive
    std::int64_t driving_minutes = 0;
    SpanBound before = SpanBound::TraceEdge;
    SpanBound after = SpanBound::TraceEdge;

    friend bool operator==(const DailyDrivingSpan&, const DailyDrivingSpan&) = default;
};

/// Driving accumulated between consecutive rest periods (daily or weekly).
///
/// With `WeeklyGapPolicy::Strict` a stretch bounded by two weekly rests is not a daily driving
/// time. With `trace_edge_is_rest` the trace start and end bound a stretch like a daily rest
/// would; otherwise the stretches before the first and after the last rest period are dropped.
/// Stretches without driving produce no span.
inline std::vector<DailyDrivingSpan> daily_driving_spans(const MinuteTrace& mt, const std::vector<Period>& rests,
                                                         const InterpretationProfile& profile) {
    std::vector<const Period*> delims;
    for (const auto& p : rests)
        if (p.is_rest_period()) delims.push_back(&p);

    auto bound_of = [](const Period* p) {
        if (!p) return SpanBound::TraceEdge;
        return p->is_weekly() ? SpanBound::WeeklyRest : SpanBound::DailyRest;
    };

    std::vector<DailyDrivingSpan> out;
    auto emit = [&](const Period* left, const Period* right) {
        if ((!left || !right) && !profile.trace_edge_is_rest) return;
        const auto b = bound_of(left);
        const auto a = bound_of(right);
        if (b == SpanBound::WeeklyRest && a == SpanBound::WeeklyRest && profile.weekly_gap == WeeklyGapPolicy::Strict)
            return;
        const std::int64_t from = left ? left->first_minute + left->minutes : 0;
        const std::int64_t to = right ? right->first_minute : mt.size();
        std::int64_t driving = 0;
        for (auto i = from; i < to; ++i) driving += mt.labels[static_cast<std::size_t>(i)] == Activity::Driving;
        if (driving == 0) return;
        out.push_back({mt.minute_start(from), mt.minute_start(to), from, to, driving, b, a});
    };

    const Period* prev = nullptr;
    for (const auto* d : delims) {
        emit(prev, d);
        prev = d;
    }
    emit(prev, nullptr);
    return out;
}

}  // namespace tacho
