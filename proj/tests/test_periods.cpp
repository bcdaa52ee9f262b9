#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tacho;
using namespace tacho::testing;

namespace {

MinuteTrace minutes_of(const SecondTrace& t, const InterpretationProfile& p = {}) {
    return label_minutes(t, p.grid(), p.rule51);
}

std::vector<AccumulatorSample> accumulate(const SecondTrace& t, const InterpretationProfile& p = {}) {
    auto mt = minutes_of(t, p);
    return accumulate_driving(mt, classify_rests(mt, p));
}

std::vector<DailyDrivingSpan> spans_of(const SecondTrace& t, const InterpretationProfile& p) {
    auto mt = minutes_of(t, p);
    return daily_driving_spans(mt, classify_rests(mt, p), p);
}

}  // namespace

TEST(ClassifyRest, Thresholds) {
    EXPECT_EQ(classify_rest_length(45 * 60, 540), PeriodKind::WeeklyRestRegular);
    EXPECT_EQ(classify_rest_length(24 * 60, 540), PeriodKind::WeeklyRestReduced);
    EXPECT_EQ(classify_rest_length(45 * 60 - 1, 540), PeriodKind::WeeklyRestReduced);
    EXPECT_EQ(classify_rest_length(24 * 60 - 1, 540), PeriodKind::DailyRest);
    EXPECT_EQ(classify_rest_length(540, 540), PeriodKind::DailyRest);
    EXPECT_EQ(classify_rest_length(539, 540), PeriodKind::Break);
    EXPECT_EQ(classify_rest_length(15, 540), PeriodKind::Break);
    EXPECT_EQ(classify_rest_length(14, 540), std::nullopt);
    EXPECT_EQ(classify_rest_length(660, 720), PeriodKind::Break);
}

TEST(ClassifyRests, Runs) {
    auto t = runs({{D, 10 * kMin}, {R, 14 * kMin}, {D, kMin}, {R, 45 * kHour}, {D, kMin}});
    InterpretationProfile p;
    p.rule51 = Rule51Semantics::NeighborRaw;
    auto mt = minutes_of(t, p);
    auto rests = classify_rests(mt, p);
    ASSERT_EQ(rests.size(), 1u);
    EXPECT_EQ(rests[0].kind, PeriodKind::WeeklyRestRegular);
    EXPECT_EQ(rests[0].first_minute, 25);
    EXPECT_EQ(rests[0].start, Instant{25 * kMin});
    EXPECT_EQ(rests[0].end, Instant{25 * kMin + 45 * kHour});
}

TEST(Accumulator, Pattern2PeaksAt120) { EXPECT_EQ(peak(accumulate(driving_pattern_2())), 120); }

TEST(Accumulator, Pattern4PeaksAt270) {
    auto s = accumulate(driving_pattern_4());
    EXPECT_EQ(s.size(), 540u);
    EXPECT_EQ(peak(s), 270);
}

TEST(Accumulator, FullBreakResets) {
    auto s = accumulate(runs({{D, 270 * kMin}, {R, 45 * kMin}, {D, 10 * kMin}}));
    EXPECT_EQ(s[269].driving, 270);
    EXPECT_EQ(s[314].driving, 0);
    EXPECT_EQ(s.back().driving, 10);
}

TEST(Accumulator, SplitBreak) {
    // 15 then 30 resets; 30 then 15 does not
    auto a = accumulate(runs({{D, 100 * kMin}, {R, 15 * kMin}, {D, 10 * kMin}, {R, 30 * kMin}, {D, 5 * kMin}}));
    EXPECT_EQ(a[124].driving, 110);
    EXPECT_EQ(a.back().driving, 5);
    auto b = accumulate(runs({{D, 100 * kMin}, {R, 30 * kMin}, {D, 10 * kMin}, {R, 15 * kMin}, {D, 5 * kMin}}));
    EXPECT_EQ(b.back().driving, 115);
    // a 14-minute stop is no break at all; the following 30 minutes alone is not enough
    auto c = accumulate(runs({{D, 100 * kMin}, {R, 14 * kMin}, {D, 10 * kMin}, {R, 30 * kMin}, {D, 5 * kMin}}));
    EXPECT_EQ(c.back().driving, 115);
}

TEST(Accumulator, MatchesIndependentStateMachine) {
    // oracle recomputed from the label sequence alone
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 100; ++rep) {
        SecondTrace t;
        for (int i = 0; i < 30; ++i) {
            append(t, D, (1 + static_cast<std::int64_t>(rng() % 60)) * kMin);
            append(t, R, (1 + static_cast<std::int64_t>(rng() % 50)) * kMin);
        }
        InterpretationProfile p;
        p.rule51 = Rule51Semantics::NeighborRaw;
        auto mt = minutes_of(t, p);
        auto s = accumulate_driving(mt, classify_rests(mt, p));
        std::int64_t acc = 0, run = 0;
        bool pending = false;
        for (std::size_t i = 0; i < mt.labels.size(); ++i) {
            if (mt.labels[i] == D) {
                ++acc;
                run = 0;
            } else {
                ++run;
            }
            const bool run_ends = mt.labels[i] != D && (i + 1 == mt.labels.size() || mt.labels[i + 1] == D);
            if (run_ends && run >= 15) {
                if (run >= 45 || (pending && run >= 30)) {
                    acc = 0;
                    pending = false;
                } else {
                    pending = true;
                }
            }
            ASSERT_EQ(s[i].driving, acc) << "minute " << i;
        }
    }
}

TEST(DailySpans, WeeklySandwich) {
    auto t = gen_weekly_sandwich();
    auto strict = spans_of(t, builtin("letter"));
    EXPECT_TRUE(strict.empty());
    auto spirit = spans_of(t, builtin("spirit"));
    ASSERT_EQ(spirit.size(), 1u);
    EXPECT_EQ(spirit[0].driving_minutes, 810);
    EXPECT_EQ(spirit[0].before, SpanBound::WeeklyRest);
    EXPECT_EQ(spirit[0].after, SpanBound::WeeklyRest);
}

TEST(DailySpans, TraceEdgeCountsAsRest) {
    auto t = runs({{D, 60 * kMin}, {R, 11 * kHour}});
    auto p = builtin("spirit");
    auto on = spans_of(t, p);
    ASSERT_EQ(on.size(), 1u);
    EXPECT_EQ(on[0].driving_minutes, 60);
    EXPECT_EQ(on[0].before, SpanBound::TraceEdge);
    EXPECT_EQ(on[0].after, SpanBound::DailyRest);
    p.trace_edge_is_rest = false;
    EXPECT_TRUE(spans_of(t, p).empty());
}

TEST(DailySpans, LongRestHasNoSpan) {
    EXPECT_TRUE(spans_of(runs({{R, 11 * kHour}}), builtin("spirit")).empty());
}

TEST(DailySpans, DailyRestThresholdKnob) {
    // a 10 h stop is a daily rest at 540, only a break at 660
    auto t = runs({{R, 11 * kHour}, {D, 5 * kHour}, {R, 10 * kHour}, {D, 5 * kHour}, {R, 11 * kHour}});
    auto p = builtin("spirit");
    EXPECT_EQ(spans_of(t, p).size(), 2u);
    p.daily_rest_threshold = 660;
    auto merged = spans_of(t, p);
    ASSERT_EQ(merged.size(), 1u);
    EXPECT_EQ(merged[0].driving_minutes, 600);
}

TEST(Periods, DisjointAndOrdered) {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        SecondTrace t;
        for (int i = 0; i < 40; ++i) {
            append(t, static_cast<Activity>(rng() % 3), (1 + static_cast<std::int64_t>(rng() % 700)) * kMin);
        }
        InterpretationProfile p;
        auto mt = minutes_of(t, p);
        auto rests = classify_rests(mt, p);
        for (std::size_t i = 0; i < rests.size(); ++i) {
            EXPECT_LT(rests[i].start, rests[i].end);
            if (i) {
                EXPECT_LT(rests[i - 1].end, rests[i].start);
            }
            for (auto m = rests[i].first_minute; m <= rests[i].last_minute(); ++m) EXPECT_NE(mt.labels[m], D);
        }
        auto spans = daily_driving_spans(mt, rests, p);
        for (std::size_t i = 1; i < spans.size(); ++i) EXPECT_LE(spans[i - 1].end, spans[i].start);
    }
}
