#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kelly {

/// Proleptic-Gregorian calendar date. Ordering is lexicographic on
/// (year, month, day), which matches chronological order.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    /// Days since 1970-01-01 (negative before the epoch).
    std::int64_t day_number() const;

    Date plus_days(std::int64_t n) const;

    /// Formats as ISO-8601 "YYYY-MM-DD".
    std::string to_string() const;

    /// Parses strict ISO-8601 "YYYY-MM-DD". Throws ParseError on anything
    /// else, including out-of-range month/day combinations.
    static Date parse(std::string_view iso);

    static Date from_day_number(std::int64_t n);
};

}  // namespace kelly
