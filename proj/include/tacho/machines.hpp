#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tacho {

using Register = boost::multiprecision::cpp_int;

/// The three one-register programs.
enum class Program {
    Decrement,         // y > 0 ? y - 1 : halt
    IncrementForever,  // y == y ? y + 1 : halt
    Collatz,           // halt at 1, halve when even, 3y + 1 when odd
};

inline std::string_view to_string(Program p) {
    switch (p) {
    case Program::Decrement: return "decrement";
    case Program::IncrementForever: return "increment-forever";
    case Program::Collatz: return "collatz";
    }
    return "?";
}

inline std::optional<Program> program_from_name(std::string_view s) {
    if (s == "decrement") return Program::Decrement;
    if (s == "increment-forever" || s == "increment") return Program::IncrementForever;
    if (s == "collatz") return Program::Collatz;
    return std::nullopt;
}

struct Outcome {
    bool halted = false;
    std::uint64_t steps = 0;             // checks performed, including the halting one
    std::vector<Register> trajectory;    // register value after reading input and after each update

    [[nodiscard]] const Register& last() const { return trajectory.back(); }
};

/// Executes at most `fuel` steps. A step inspects the register and either halts or updates it.
/// Running out of fuel is an outcome, not an error.
inline Outcome run(Program p, const Register& input, std::uint64_t fuel) {
    if (fuel < 1) throw std::invalid_argument("run: fuel must be at least 1");
    if (input < 0) throw std::invalid_argument("run: input must be a natural number");

    Outcome out;
    Register y = input;
    out.trajectory.push_back(y);
    while (out.steps < fuel) {
        ++out.steps;
        switch (p) {
        case Program::Decrement:
            if (y > 0) {
                --y;
            } else {
                out.halted = true;
            }
            break;
        case Program::IncrementForever:
            ++y;  // the halting branch needs y != y
            break;
        case Program::Collatz:
            if (y == 1) {
                out.halted = true;
            } else if ((y & 1) == 0) {
                y >>= 1;
            } else {
                y = 3 * y + 1;
            }
            break;
        }
        if (out.halted) break;
        out.trajectory.push_back(y);
    }
    return out;
}

/// Either the program is seen to halt within the fuel, or nothing is known. There is no
/// "loops" answer.
enum class HaltVerdict { Halts, Unknown };

inline HaltVerdict bounded_halts(Program p, const Register& input, std::uint64_t fuel) {
    return run(p, input, fuel).halted ? HaltVerdict::Halts : HaltVerdict::Unknown;
}

}  // namespace tacho
