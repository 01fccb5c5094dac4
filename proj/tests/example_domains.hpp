#pragma once

// Finite ordered domains with hand-written order-isomorphisms onto [0, U).

#include <array>
#include <cstdint>

#include "dialsort/domain.hpp"

namespace dialsort::testing::domains {

inline DomainCodec<unsigned char> byte_codec() {
    return {Universe(256), [](const unsigned char& c) { return std::uint64_t{c}; },
            [](std::uint64_t i) { return static_cast<unsigned char>(i); }};
}

// Calendar dates of a leap year, ordered by (month, day).
struct Date {
    int month;
    int day;
    friend bool operator==(const Date&, const Date&) = default;
};
inline bool date_less(const Date& a, const Date& b) {
    return a.month != b.month ? a.month < b.month : a.day < b.day;
}
constexpr std::array<int, 12> kMonthDays{31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

inline DomainCodec<Date> day_number_codec() {
    return {Universe(366),
            [](const Date& d) {
                std::uint64_t index = 0;
                for (int m = 1; m < d.month; ++m) index += kMonthDays[m - 1];
                return index + static_cast<std::uint64_t>(d.day - 1);
            },
            [](std::uint64_t i) {
                int m = 1;
                while (i >= static_cast<std::uint64_t>(kMonthDays[m - 1])) {
                    i -= kMonthDays[m - 1];
                    ++m;
                }
                return Date{m, static_cast<int>(i) + 1};
            }};
}

// Seven symbols whose order is given by a rank table, not by their enumerator values.
enum class Grade { C, A, F, B, D, E, S };
constexpr std::array<std::uint64_t, 7> kGradeRank{4, 6, 0, 5, 3, 1, 2}; // rank of C, A, F, B, D, E, S
constexpr std::array<Grade, 7> kGradeByRank{Grade::F, Grade::E, Grade::S, Grade::D, Grade::C, Grade::B, Grade::A};

inline bool grade_less(Grade a, Grade b) {
    return kGradeRank[static_cast<int>(a)] < kGradeRank[static_cast<int>(b)];
}

inline DomainCodec<Grade> grade_codec() {
    return {Universe(7), [](const Grade& g) { return kGradeRank[static_cast<int>(g)]; },
            [](std::uint64_t i) { return kGradeByRank[i]; }};
}

} // namespace dialsort::testing::domains
