#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "tacho/minutes.hpp"
#include "tacho/periods.hpp"
#include "tacho/profile.hpp"
#include "tacho/timeline.hpp"
#include "tacho/weekly_rest.hpp"

namespace tacho {

// Daily driving limits, minutes. Both are "shall not exceed": the limit itself is legal.
inline constexpr std::int64_t kDailyDrivingLimit = 9 * 60;
inline constexpr std::int64_t kExtendedDailyDrivingLimit = 10 * 60;
inline constexpr int kExtensionsPerWeek = 2;
inline constexpr std::int64_t kDailyRestWindow = 24 * kSecondsPerHour;

struct Violation {
    std::string article;  // "6.1", "7", "8.2", "8.6"
    Instant start;
    Instant end;
    std::string detail;
    std::string profile_id;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// ---------------------------------------------------------------------------
// Article 7

/// One violation per maximal stretch in which accumulated driving is above 270 minutes,
/// covering the driving minutes from the 271st to the last.
inline std::vector<Violation> check_article7(const std::vector<AccumulatorSample>& samples,
                                             const std::string& profile_id = {}) {
    std::vector<Violation> out;
    std::size_t i = 0;
    while (i < samples.size()) {
        if (samples[i].driving <= kMaxDrivingPeriod) {
            ++i;
            continue;
        }
        // the window ends with the last driving minute; the total stays high through the break
        std::size_t j = i;
        std::size_t last_driving = i;
        std::int64_t worst = 0;
        while (j < samples.size() && samples[j].driving > kMaxDrivingPeriod) {
            if (samples[j].driving > worst) {
                worst = samples[j].driving;
                last_driving = j;
            }
            ++j;
        }
        out.push_back({"7", samples[i].at - kSecondsPerMinute, samples[last_driving].at,
                       "driving period of " + std::to_string(worst) + " min without a qualifying break (limit " +
                           std::to_string(kMaxDrivingPeriod) + ")",
                       profile_id});
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Article 6.1

struct ExtensionCharge {
    std::size_t span = 0;  // index into the span list
    std::int64_t week = 0;
};

/// Charges every extended daily driving time (over 9 h, at most 10 h) to a week.
///
/// Spans inside one week go to that week. A span crossing Sunday 24:00 goes to the week it
/// starts in, the week it ends in, or, for `MinimizeViolations`, whichever choice minimises the
/// number of weeks' excess extensions (ties resolved towards the end week).
inline std::vector<ExtensionCharge> charge_extensions(const std::vector<DailyDrivingSpan>& spans,
                                                      const WeekCalendar& calendar, ExtendedAttribution mode) {
    struct Ext {
        std::size_t span;
        std::int64_t ws;
        std::int64_t we;
    };
    std::vector<Ext> fixed;
    std::vector<Ext> crossing;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const auto d = spans[i].driving_minutes;
        if (d <= kDailyDrivingLimit || d > kExtendedDailyDrivingLimit) continue;
        Ext e{i, calendar.week_of(spans[i].start).index, calendar.week_of(spans[i].end - 1).index};
        (e.ws == e.we ? fixed : crossing).push_back(e);
    }

    std::vector<ExtensionCharge> out;
    for (const auto& e : fixed) out.push_back({e.span, e.ws});

    if (mode != ExtendedAttribution::MinimizeViolations) {
        for (const auto& e : crossing) out.push_back({e.span, mode == ExtendedAttribution::StartWeek ? e.ws : e.we});
    } else if (!crossing.empty()) {
        std::map<std::int64_t, int> base;
        for (const auto& e : fixed) ++base[e.ws];
        auto excess = [&](std::int64_t w, int extra) {
            auto it = base.find(w);
            const int n = (it == base.end() ? 0 : it->second) + extra;
            return std::max(0, n - kExtensionsPerWeek);
        };

        // Disjoint spans each contain a distinct week boundary, so crossing i can share a week
        // only with crossing i-1 (its end week) and i+1 (its start week). Choice 1 = end week.
        const std::size_t m = crossing.size();
        constexpr int kInf = std::numeric_limits<int>::max() / 2;
        std::vector<std::array<int, 2>> cost(m, {kInf, kInf});
        std::vector<std::array<int, 2>> from(m, {0, 0});
        for (int c : {1, 0}) cost[0][c] = excess(crossing[0].ws, c == 0 ? 1 : 0);
        for (std::size_t i = 1; i < m; ++i) {
            const bool shared = crossing[i - 1].we == crossing[i].ws;
            for (int c : {1, 0}) {
                for (int p : {1, 0}) {
                    int add = 0;
                    if (shared) {
                        add += excess(crossing[i].ws, (c == 0) + (p == 1));
                    } else {
                        add += excess(crossing[i - 1].we, p == 1 ? 1 : 0);
                        add += excess(crossing[i].ws, c == 0 ? 1 : 0);
                    }
                    const int total = cost[i - 1][p] + add;
                    if (total < cost[i][c]) {
                        cost[i][c] = total;
                        from[i][c] = p;
                    }
                }
            }
        }
        int best = 1;
        if (cost[m - 1][0] + excess(crossing[m - 1].we, 0) < cost[m - 1][1] + excess(crossing[m - 1].we, 1)) best = 0;
        std::vector<int> choice(m);
        for (std::size_t i = m; i-- > 0;) {
            choice[i] = best;
            best = from[i][best];
        }
        for (std::size_t i = 0; i < m; ++i)
            out.push_back({crossing[i].span, choice[i] == 1 ? crossing[i].we : crossing[i].ws});
    }

    std::sort(out.begin(), out.end(), [](const ExtensionCharge& a, const ExtensionCharge& b) { return a.span < b.span; });
    return out;
}

/// Daily driving over 10 h, and any third or later extension charged to the same week.
inline std::vector<Violation> check_article61(const std::vector<DailyDrivingSpan>& spans, const WeekCalendar& calendar,
                                              const InterpretationProfile& profile) {
    std::vector<Violation> out;
    for (const auto& s : spans) {
        if (s.driving_minutes > kExtendedDailyDrivingLimit)
            out.push_back({"6.1", s.start, s.end,
                           "daily driving time " + std::to_string(s.driving_minutes) + " min exceeds 600",
                           profile.id});
    }
    std::map<std::int64_t, int> used;
    for (const auto& c : charge_extensions(spans, calendar, profile.extended_attribution)) {
        const auto& s = spans[c.span];
        if (++used[c.week] > kExtensionsPerWeek)
            out.push_back({"6.1", s.start, s.end,
                           "extension #" + std::to_string(used[c.week]) + " to 10 h in week " +
                               std::to_string(c.week) + " (" + std::to_string(s.driving_minutes) + " min)",
                           profile.id});
    }
    std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) { return a.start < b.start; });
    return out;
}

// ---------------------------------------------------------------------------
// Article 8.2

/// After the end of each rest period, a new rest period must be taken within 24 h.
///
/// A rest period longer than the daily threshold counts as taken once its first
/// `daily_rest_threshold` minutes have elapsed. With `trace_edge_is_rest` the trace start is
/// treated as the end of a rest. Windows that run past the end of the trace are not judged.
inline std::vector<Violation> check_article82(const std::vector<Period>& rests, const MinuteTrace& mt,
                                              const InterpretationProfile& profile) {
    std::vector<const Period*> rp;
    for (const auto& p : rests)
        if (p.is_rest_period()) rp.push_back(&p);

    std::vector<Instant> anchors;
    if (profile.trace_edge_is_rest) anchors.push_back(mt.start());
    for (const auto* p : rp) anchors.push_back(p->end);

    std::vector<Violation> out;
    for (auto t : anchors) {
        const Instant window_end = t + kDailyRestWindow;
        bool satisfied = false;
        for (const auto* p : rp) {
            if (p->start < t) continue;
            satisfied = p->start + profile.daily_rest_threshold * kSecondsPerMinute <= window_end;
            break;
        }
        if (!satisfied && mt.end() >= window_end)
            out.push_back({"8.2", t, window_end, "no new daily rest period within 24 h", profile.id});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Article 8.6 / 8.9

struct WeeklyRestOutcome {
    std::vector<Violation> violations;
    std::vector<std::string> notices;
    std::vector<std::pair<std::int64_t, bool>> week_verdicts;  // (week, legal)
};

inline WeeklyRestOutcome check_article86(const MinuteTrace& mt, const WeekCalendar& calendar,
                                         const InterpretationProfile& profile) {
    WeeklyRestOutcome out;
    WeeklyRestSolver solver(mt, calendar, profile);
    if (!solver.has_scope()) {
        out.notices.push_back("8.6 skipped: fewer than two complete weeks in the trace");
        return out;
    }
    try {
        bool any_illegal = false;
        for (auto w = solver.scope_first(); w <= solver.scope_last(); ++w) {
            const bool legal = solver.solve_week(w).has_value();
            out.week_verdicts.emplace_back(w, legal);
            if (!legal) {
                any_illegal = true;
                out.violations.push_back({"8.6", calendar.week_start(w), calendar.week_end(w),
                                          "no reading of weekly rests and compensations makes week " +
                                              std::to_string(w) + " legal",
                                          profile.id});
            }
        }
        if (!any_illegal && !solver.solve_all()) {
            out.violations.push_back({"8.6", calendar.week_start(solver.scope_first()),
                                      calendar.week_end(solver.scope_last()),
                                      "weeks are legal one by one but no single reading makes all of them legal",
                                      profile.id});
        }
    } catch (const WeeklyRestSolver::BudgetExceeded& e) {
        out.violations.clear();
        out.week_verdicts.clear();
        out.notices.push_back(std::string("8.6 undecided: ") + e.what());
    }
    return out;
}

}  // namespace tacho
