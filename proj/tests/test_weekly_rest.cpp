#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tacho;
using namespace tacho::testing;

namespace {

/// One week: other work, a rest starting Wednesday 00:00, optionally a second rest on Saturday.
void week(SecondTrace& t, std::int64_t rest_hours, std::int64_t extra_rest_hours = 0) {
    const auto start = t.size();
    append(t, W, 2 * kSecondsPerDay);
    if (rest_hours > 0) append(t, R, rest_hours * kHour);
    if (extra_rest_hours > 0) {
        append(t, W, 5 * kSecondsPerDay - rest_hours * kHour - extra_rest_hours * kHour - 6 * kHour);
        append(t, R, extra_rest_hours * kHour);
    }
    append(t, W, kSecondsPerWeek - (t.size() - start));
}

SecondTrace weeks(std::initializer_list<std::int64_t> rest_hours) {
    SecondTrace t;
    for (auto h : rest_hours) week(t, h);
    return t;
}

WeeklyRestOutcome outcome(const SecondTrace& t, const InterpretationProfile& p = builtin("spirit")) {
    auto mt = label_minutes(t, p.grid(), p.rule51);
    return check_article86(mt, WeekCalendar(p.leap_week_policy, {}), p);
}

bool week_legal(const WeeklyRestOutcome& o, std::int64_t w) {
    for (auto [k, legal] : o.week_verdicts)
        if (k == w) return legal;
    ADD_FAILURE() << "no verdict for week " << w;
    return false;
}

/// Independent check of a global witness: pair rule, compensation amount, placement and deadline.
void expect_valid(WeeklyRestSolver& s, const WeeklyRestSolver::Witness& wit, const WeekCalendar& cal,
                  const InterpretationProfile& p) {
    std::map<std::int64_t, std::vector<std::size_t>> by_week;
    for (std::size_t i = 0; i < wit.counted_week.size(); ++i)
        if (wit.counted_week[i]) by_week[*wit.counted_week[i]].push_back(i);

    for (auto w = s.scope_first(); w < s.scope_last(); ++w) {
        int total = 0;
        bool regular = false;
        for (auto k : {w, w + 1}) {
            for (auto i : by_week[k]) {
                ++total;
                regular |= wit.remaining_minutes[i] >= kRegularWeeklyRest;
            }
        }
        EXPECT_GE(total, 2) << "weeks " << w << "," << w + 1;
        EXPECT_TRUE(regular) << "weeks " << w << "," << w + 1;
    }

    std::map<std::size_t, std::int64_t> paid, carved;
    for (const auto& c : wit.compensations) {
        paid[c.reduced_run] += c.minutes;
        carved[c.host_run] += c.minutes;
        ASSERT_TRUE(wit.counted_week[c.reduced_run]);
        EXPECT_GE(s.run_start(c.host_run), s.run_end(c.reduced_run));
        EXPECT_LE(s.run_start(c.host_run) + c.minutes * kMin, cal.week_end(*wit.counted_week[c.reduced_run] + 3));
        if (p.attached_compensation) {
            EXPECT_GE((s.run_end(c.host_run) - s.run_start(c.host_run)) / kMin, p.daily_rest_threshold);
        }
    }
    for (std::size_t i = 0; i < wit.counted_week.size(); ++i) {
        const auto len = (s.run_end(i) - s.run_start(i)) / kMin;
        EXPECT_EQ(wit.remaining_minutes[i], len - carved[i]);
        if (!wit.counted_week[i]) continue;
        const auto w = *wit.counted_week[i];
        EXPECT_GE(wit.remaining_minutes[i], kReducedWeeklyRest);
        if (wit.remaining_minutes[i] < kRegularWeeklyRest && w >= s.scope_first() && w <= s.scope_last()) {
            EXPECT_EQ(paid[i], kRegularWeeklyRest - wit.remaining_minutes[i]);
        }
    }
}

}  // namespace

TEST(Article86, RegularRestsEveryWeek) {
    auto o = outcome(weeks({45, 45, 45}));
    EXPECT_TRUE(o.violations.empty());
    EXPECT_EQ(o.week_verdicts.size(), 3u);
}

TEST(Article86, ReducedRestCompensatedEnBloc) {
    // 24 h in week 1 owes 21 h; the 66 h rest of week 2 pays it and keeps 45 h
    auto o = outcome(weeks({45, 24, 66, 45}));
    EXPECT_TRUE(o.violations.empty());
}

TEST(Article86, ReducedRestWithoutCompensation) {
    // week 2's rest could pay only by shrinking to 24 h, leaving weeks 1-2 without a regular rest
    auto o = outcome(weeks({45, 24, 45}));
    EXPECT_FALSE(week_legal(o, 1));
    EXPECT_FALSE(o.violations.empty());
}

TEST(Article86, TwoReducedInARow) {
    auto o = outcome(weeks({45, 24, 24, 90, 45}));
    EXPECT_FALSE(week_legal(o, 1));
}

TEST(Article86, MissingRestInAWeek) {
    auto o = outcome(weeks({45, 0, 45}));
    EXPECT_FALSE(o.violations.empty());
}

TEST(Article86, FewerThanTwoWeeksSkipped) {
    auto o = outcome(weeks({45}));
    EXPECT_TRUE(o.violations.empty());
    ASSERT_EQ(o.notices.size(), 1u);
    EXPECT_NE(o.notices[0].find("skipped"), std::string::npos);
}

TEST(Article86, AttachedCompensationKnob) {
    // 40 h owes 5 h; a separate 5 h rest can pay it only when compensation need not be attached
    SecondTrace t;
    week(t, 45);
    week(t, 40);
    week(t, 45, 5);
    auto p = builtin("spirit");
    EXPECT_TRUE(outcome(t, p).violations.empty());
    p.attached_compensation = true;
    EXPECT_FALSE(outcome(t, p).violations.empty());
}

TEST(Article86, WitnessesPassIndependentCheck) {
    std::mt19937_64 rng(29);
    const std::int64_t choices[] = {0, 20, 24, 30, 40, 45, 50, 66, 80};
    int solved = 0;
    for (int rep = 0; rep < 150; ++rep) {
        SecondTrace t;
        for (int w = 0; w < 5; ++w) week(t, choices[rng() % 9], rng() % 3 == 0 ? 20 : 0);
        for (bool attached : {false, true}) {
            auto p = builtin("spirit");
            p.attached_compensation = attached;
            auto mt = label_minutes(t, p.grid(), p.rule51);
            WeekCalendar cal;
            WeeklyRestSolver s(mt, cal, p);
            auto all = s.solve_all();
            if (all) {
                ++solved;
                expect_valid(s, *all, cal, p);
                // a global reading also vouches for every week
                for (auto w = s.scope_first(); w <= s.scope_last(); ++w) EXPECT_TRUE(s.solve_week(w).has_value());
            }
        }
    }
    EXPECT_GT(solved, 0);
}

TEST(Article86, BudgetExceededIsReported) {
    auto t = gen_compensation_chain(5);
    auto p = builtin("spirit");
    auto mt = label_minutes(t, p.grid(), p.rule51);
    WeeklyRestSolver s(mt, WeekCalendar{}, p, 1);
    EXPECT_THROW(s.solve_all(), WeeklyRestSolver::BudgetExceeded);
}
