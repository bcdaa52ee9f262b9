#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tacho/divergence.hpp"
#include "tacho/engine.hpp"
#include "tacho/machines.hpp"
#include "tacho/mischief.hpp"
#include "tacho/partition.hpp"
#include "tacho/profiles.hpp"
#include "tacho/proplogic.hpp"
#include "tacho/timeline.hpp"

namespace tacho::cli {

enum ExitStatus : int { kOk = 0, kFindings = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A profile file, or the name of a built-in profile when no such file exists.
inline InterpretationProfile load_profile(const std::string& spec) {
    if (std::filesystem::exists(spec)) return parse_profile(read_file(spec));
    const auto builtins = builtin_profiles();
    if (auto it = builtins.find(spec); it != builtins.end()) return it->second;
    throw UsageError("no profile file or built-in profile named '" + spec + "'");
}

inline std::vector<std::int64_t> parse_values(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string cur;
    auto flush = [&] {
        auto t = std::string(detail::trim(cur));
        cur.clear();
        if (t.empty()) return;
        std::int64_t v = 0;
        if (!detail::parse_i64(t, v)) throw UsageError("bad value '" + t + "'");
        out.push_back(v);
    };
    for (char c : text) {
        if (c == ',' || c == '\n' || c == ' ' || c == '\t') flush();
        else cur += c;
    }
    flush();
    return out;
}

inline void summary(std::ostream& err, const Report& r) {
    err << "profile " << r.profile.id << " (grid offset " << r.profile.grid_offset << " s): " << r.stats.minutes
        << " min, " << r.stats.driving_minutes << " driving, peak driving period " << r.stats.peak_driving_period
        << ", " << r.spans.size() << " daily driving spans, " << r.violations.size() << " violation(s)\n";
    for (const auto& v : r.violations)
        err << "  Art. " << v.article << " [" << v.start.seconds << ", " << v.end.seconds << "): " << v.detail << "\n";
    for (const auto& n : r.notices) err << "  note: " << n << "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Driver-hours compliance engine and companion demonstrations"};
    app.require_subcommand(1);

    std::string trace_path, profile_spec, leap_path;
    std::vector<std::string> profile_specs;
    std::optional<std::int64_t> grid_offset;
    bool pretty = false;

    auto* check = app.add_subcommand("check", "Check a trace under one interpretation profile");
    check->add_option("trace", trace_path, "Trace file")->required();
    check->add_option("--profile", profile_spec, "Profile JSON file or built-in name")->required();
    check->add_option("--grid-offset", grid_offset, "Override the profile's minute-grid offset (seconds)");
    check->add_option("--leap-table", leap_path, "Leap-second table JSON");
    check->add_flag("--pretty", pretty, "Human summary on stderr");

    auto* diff = app.add_subcommand("diff", "Compare verdicts of several profiles on one trace");
    diff->add_option("trace", trace_path, "Trace file")->required();
    diff->add_option("--profiles", profile_specs, "Profile JSON files or built-in names")->required()->expected(2, -1);
    diff->add_option("--leap-table", leap_path, "Leap-second table JSON");
    diff->add_flag("--pretty", pretty, "Human summary on stderr");

    std::string demo_name, demo_out;
    std::int64_t depth = 2;
    auto* demo = app.add_subcommand("demo", "Emit a counterexample trace and a verdict summary");
    demo->add_option("name", demo_name, "pattern1|pattern2|pattern3|pattern4|sandwich|shift|chain")
        ->required()
        ->check(CLI::IsMember({"pattern1", "pattern2", "pattern3", "pattern4", "sandwich", "shift", "chain"}));
    demo->add_option("--out", demo_out, "Write the trace here instead of stdout");
    demo->add_option("--depth", depth, "Compensation chain depth (chain only)");

    std::string values_text, values_file;
    bool brute = false;
    auto* part = app.add_subcommand("partition", "Minimum-difference split of a patrimony");
    part->add_option("values", values_text, "Comma-separated item values in cents");
    part->add_option("--file", values_file, "File with item values");
    part->add_flag("--brute-force", brute, "Use exhaustive search (at most 24 items)");

    std::string program_name, input_text;
    std::uint64_t fuel = 1000;
    auto* machine = app.add_subcommand("machine", "Run a one-register program with a step budget");
    machine->add_option("program", program_name, "decrement|increment-forever|collatz")->required();
    machine->add_option("input", input_text, "Natural number input")->required();
    machine->add_option("--fuel", fuel, "Maximum number of steps");

    std::string formula_text;
    bool table = false;
    auto* logic_cmd = app.add_subcommand("logic", "Tautology check by truth table");
    logic_cmd->add_option("formula", formula_text, "Formula using ! & | -> and parentheses")->required();
    logic_cmd->add_flag("--table", table, "Print the truth table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (*check) {
            auto trace = parse_trace(read_file(trace_path));
            auto profile = load_profile(profile_spec);
            if (grid_offset) profile.grid_offset = *grid_offset;
            const LeapTable leaps = leap_path.empty() ? LeapTable{} : parse_leap_table(read_file(leap_path));
            const auto report = check_all(trace, profile, leaps);
            out << to_json(report).dump(2) << "\n";
            if (pretty) summary(err, report);
            return report.violations.empty() ? kOk : kFindings;
        }
        if (*diff) {
            auto trace = parse_trace(read_file(trace_path));
            std::vector<InterpretationProfile> profiles;
            for (const auto& s : profile_specs) profiles.push_back(load_profile(s));
            const LeapTable leaps = leap_path.empty() ? LeapTable{} : parse_leap_table(read_file(leap_path));
            const auto d = diff_verdicts(trace, profiles, leaps);
            out << to_json(d).dump(2) << "\n";
            if (pretty) err << d.disagreements.size() << " disagreement(s) across " << d.profile_ids.size() << " profiles\n";
            return d.empty() ? kOk : kFindings;
        }
        if (*demo) {
            SecondTrace trace;
            const auto builtins = builtin_profiles();
            std::vector<std::string> compare{"letter", "spirit"};
            if (demo_name == "pattern1") trace = driving_pattern_1();
            else if (demo_name == "pattern2") trace = driving_pattern_2();
            else if (demo_name == "pattern3") trace = driving_pattern_3();
            else if (demo_name == "pattern4") trace = driving_pattern_4();
            else if (demo_name == "sandwich") trace = gen_weekly_sandwich();
            else if (demo_name == "shift") {
                trace = find_shift_divergent().trace;
                compare = {"unix-grid", "utc-grid"};
            } else {
                trace = gen_compensation_chain(depth);
            }

            const auto text = format_trace(trace);
            if (demo_out.empty()) {
                out << text;
            } else {
                std::ofstream f(demo_out, std::ios::binary);
                if (!f) throw UsageError("cannot write " + demo_out);
                f << text;
            }
            for (const auto& id : compare) summary(err, check_all(trace, builtins.at(id)));
            if (demo_name == "chain") {
                const auto cut = truncate_weeks(trace, depth);
                err << "truncated before week " << depth << ":\n";
                summary(err, check_all(cut, builtins.at("spirit")));
            }
            return kOk;
        }
        if (*part) {
            if (values_text.empty() == values_file.empty()) throw UsageError("give either values or --file");
            Patrimony p{parse_values(values_file.empty() ? values_text : read_file(values_file))};
            const auto s = brute ? brute_force_split(p) : optimal_split(p);
            out << "assignment:";
            for (bool b : s.side) out << (b ? " B" : " A");
            out << "\nsides: " << side_total(p, s, false) << " " << side_total(p, s, true) << "\n";
            out << "difference: " << s.difference << "\n";
            out << "distributions: " << count_distributions(p.values.size()) << "\n";
            return kOk;
        }
        if (*machine) {
            auto prog = program_from_name(program_name);
            if (!prog) throw UsageError("unknown program '" + program_name + "'");
            Register input;
            try {
                input = Register(input_text);
            } catch (const std::exception&) {
                throw UsageError("input must be a natural number");
            }
            if (input < 0 || fuel < 1) throw UsageError("input must be a natural number and fuel at least 1");
            const auto o = tacho::run(*prog, input, fuel);
            for (std::size_t i = 0; i < o.trajectory.size(); ++i) out << (i ? " " : "") << o.trajectory[i];
            out << "\n";
            if (o.halted) err << "halted after " << o.steps << " steps\n";
            else err << "fuel exhausted after " << o.steps << " steps; halting unknown\n";
            return kOk;
        }
        if (*logic_cmd) {
            const auto f = logic::parse_formula(formula_text);
            if (table) {
                const auto atoms = f.atoms();
                for (const auto& a : atoms) out << a << " ";
                out << "| " << f.to_string() << "\n";
                logic::for_each_valuation(f, [&](const logic::Valuation& v) {
                    for (const auto& a : atoms) out << std::string(a.size() - 1, ' ') << v.at(a) << " ";
                    out << "| " << logic::eval(f, v) << "\n";
                    return true;
                });
            }
            const auto cex = logic::counterexample(f);
            if (!cex) {
                out << "tautology\n";
                return kOk;
            }
            out << "not a tautology; counterexample:";
            for (const auto& [a, b] : *cex) out << " " << a << "=" << b;
            out << "\n";
            return kFindings;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TraceFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ProfileError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const logic::SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace tacho::cli
