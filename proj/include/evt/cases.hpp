#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace evt {

// The six statistics built from an i.i.d. standard normal pair (X, Y).
// Ordering matches the CLI labels below and stays stable across releases.
enum class Case : std::uint8_t {
    normal,        // X
    abs_normal,    // |X|
    sum_normal,    // X + Y (simulated as X - Y; same law by symmetry)
    sum_abs,       // |X| + |Y|
    diff_abs,      // |X| - |Y|
    abs_diff_abs,  // ||X| - |Y||
};

inline constexpr std::array<Case, 6> all_cases = {
    Case::normal,   Case::abs_normal, Case::sum_normal,
    Case::sum_abs,  Case::diff_abs,   Case::abs_diff_abs,
};

constexpr std::string_view to_string(Case c) {
    switch (c) {
        case Case::normal: return "normal";
        case Case::abs_normal: return "abs-normal";
        case Case::sum_normal: return "sum-normal";
        case Case::sum_abs: return "sum-abs";
        case Case::diff_abs: return "diff-abs";
        case Case::abs_diff_abs: return "abs-diff-abs";
    }
    return "?";
}

constexpr std::optional<Case> case_from_string(std::string_view s) {
    for (Case c : all_cases)
        if (to_string(c) == s) return c;
    return std::nullopt;
}

} // namespace evt
