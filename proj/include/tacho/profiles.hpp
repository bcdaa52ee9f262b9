#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tacho/profile.hpp"
#include "tacho/timeline.hpp"

namespace tacho {

class ProfileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename E>
struct EnumNames;

template <>
struct EnumNames<LeapWeekPolicy> {
    static constexpr std::pair<LeapWeekPolicy, const char*> table[] = {{LeapWeekPolicy::Letter, "Letter"},
                                                                        {LeapWeekPolicy::Spirit, "Spirit"}};
};
template <>
struct EnumNames<Rule51Semantics> {
    static constexpr std::pair<Rule51Semantics, const char*> table[] = {
        {Rule51Semantics::NeighborRaw, "NeighborRaw"},
        {Rule51Semantics::NeighborRule52, "NeighborRule52"},
        {Rule51Semantics::Fixpoint, "Fixpoint"}};
};
template <>
struct EnumNames<WeeklyGapPolicy> {
    static constexpr std::pair<WeeklyGapPolicy, const char*> table[] = {{WeeklyGapPolicy::Strict, "Strict"},
                                                                         {WeeklyGapPolicy::Spirit, "Spirit"}};
};
template <>
struct EnumNames<ExtendedAttribution> {
    static constexpr std::pair<ExtendedAttribution, const char*> table[] = {
        {ExtendedAttribution::StartWeek, "StartWeek"},
        {ExtendedAttribution::EndWeek, "EndWeek"},
        {ExtendedAttribution::MinimizeViolations, "MinimizeViolations"}};
};

template <typename E>
std::string enum_name(E e) {
    for (auto [v, n] : EnumNames<E>::table)
        if (v == e) return n;
    throw ProfileError("unnamed enum value");
}

template <typename E>
E enum_from(const nlohmann::json& j, const std::string& key) {
    if (!j.is_string()) throw ProfileError("profile key '" + key + "' must be a string");
    const auto s = j.get<std::string>();
    for (auto [v, n] : EnumNames<E>::table)
        if (s == n) return v;
    throw ProfileError("profile key '" + key + "': unknown value '" + s + "'");
}

}  // namespace detail

inline const std::set<std::string>& profile_keys() {
    static const std::set<std::string> keys{"id",
                                            "leap_week_policy",
                                            "rule51",
                                            "weekly_gap",
                                            "trace_edge_is_rest",
                                            "extended_attribution",
                                            "daily_rest_threshold",
                                            "attached_compensation",
                                            "grid_offset"};
    return keys;
}

/// Knobs in a fixed order so serialised profiles are byte-stable.
inline nlohmann::ordered_json to_json(const InterpretationProfile& p) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["leap_week_policy"] = detail::enum_name(p.leap_week_policy);
    j["rule51"] = detail::enum_name(p.rule51);
    j["weekly_gap"] = detail::enum_name(p.weekly_gap);
    j["trace_edge_is_rest"] = p.trace_edge_is_rest;
    j["extended_attribution"] = detail::enum_name(p.extended_attribution);
    j["daily_rest_threshold"] = p.daily_rest_threshold;
    j["attached_compensation"] = p.attached_compensation;
    j["grid_offset"] = p.grid_offset;
    return j;
}

/// Every knob must be present and nothing else may be; there are no silent defaults.
inline InterpretationProfile profile_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ProfileError("profile must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!profile_keys().count(it.key())) throw ProfileError("unknown profile key '" + it.key() + "'");
    for (const auto& k : profile_keys())
        if (!j.contains(k)) throw ProfileError("missing profile key '" + k + "'");

    auto boolean = [&](const char* k) {
        if (!j.at(k).is_boolean()) throw ProfileError(std::string("profile key '") + k + "' must be a boolean");
        return j.at(k).get<bool>();
    };
    auto integer = [&](const char* k) {
        if (!j.at(k).is_number_integer()) throw ProfileError(std::string("profile key '") + k + "' must be an integer");
        return j.at(k).get<std::int64_t>();
    };

    InterpretationProfile p;
    if (!j.at("id").is_string() || j.at("id").get<std::string>().empty())
        throw ProfileError("profile key 'id' must be a non-empty string");
    p.id = j.at("id").get<std::string>();
    p.leap_week_policy = detail::enum_from<LeapWeekPolicy>(j.at("leap_week_policy"), "leap_week_policy");
    p.rule51 = detail::enum_from<Rule51Semantics>(j.at("rule51"), "rule51");
    p.weekly_gap = detail::enum_from<WeeklyGapPolicy>(j.at("weekly_gap"), "weekly_gap");
    p.trace_edge_is_rest = boolean("trace_edge_is_rest");
    p.extended_attribution = detail::enum_from<ExtendedAttribution>(j.at("extended_attribution"), "extended_attribution");
    p.daily_rest_threshold = integer("daily_rest_threshold");
    p.attached_compensation = boolean("attached_compensation");
    p.grid_offset = integer("grid_offset");
    if (p.daily_rest_threshold <= 0) throw ProfileError("daily_rest_threshold must be positive");
    return p;
}

inline InterpretationProfile parse_profile(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProfileError(std::string("profile is not valid JSON: ") + e.what());
    }
    return profile_from_json(j);
}

/// `letter`, `spirit`, `unix-grid` and `utc-grid`. The two grid profiles differ only in the
/// 27 s offset between a leap-second-free clock and UTC.
inline std::map<std::string, InterpretationProfile> builtin_profiles() {
    InterpretationProfile spirit;
    spirit.id = "spirit";

    InterpretationProfile letter;
    letter.id = "letter";
    letter.leap_week_policy = LeapWeekPolicy::Letter;
    letter.weekly_gap = WeeklyGapPolicy::Strict;
    letter.trace_edge_is_rest = false;
    letter.extended_attribution = ExtendedAttribution::StartWeek;

    InterpretationProfile unix_grid = spirit;
    unix_grid.id = "unix-grid";
    unix_grid.grid_offset = 0;

    InterpretationProfile utc_grid = spirit;
    utc_grid.id = "utc-grid";
    utc_grid.grid_offset = 27;

    return {{letter.id, letter}, {spirit.id, spirit}, {unix_grid.id, unix_grid}, {utc_grid.id, utc_grid}};
}

/// `[{"sunday_index": n, "delta": 1 | -1}, ...]`
inline LeapTable parse_leap_table(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProfileError(std::string("leap table is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ProfileError("leap table must be a JSON array");
    LeapTable out;
    for (const auto& e : j) {
        if (!e.is_object() || e.size() != 2 || !e.contains("sunday_index") || !e.contains("delta") ||
            !e["sunday_index"].is_number_integer() || !e["delta"].is_number_integer())
            throw ProfileError("leap table entries must be {\"sunday_index\": int, \"delta\": int}");
        const auto d = e["delta"].get<int>();
        if (d != 1 && d != -1) throw ProfileError("leap second delta must be +1 or -1");
        out.push_back({e["sunday_index"].get<std::int64_t>(), d});
    }
    return out;
}

}  // namespace tacho
