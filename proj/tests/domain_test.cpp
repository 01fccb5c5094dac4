#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <string>
#include <vector>

#include "dialsort/domain.hpp"
#include "example_domains.hpp"

namespace dialsort {
namespace {

using namespace testing::domains;

template <class T, class Less>
std::vector<T> oracle_sorted(std::vector<T> items, Less less) {
    std::stable_sort(items.begin(), items.end(), less);
    return items;
}

// --- tests -----------------------------------------------------------------

TEST(SortDomain, AsciiBytes) {
    std::string s = "dcba";
    std::vector<unsigned char> items(s.begin(), s.end());
    sort_domain<unsigned char>(items, byte_codec());
    EXPECT_EQ(std::string(items.begin(), items.end()), "abcd");
}

TEST(SortDomain, MidiNotes) {
    DomainCodec<int> midi{Universe(128), [](const int& n) { return static_cast<std::uint64_t>(n); },
                          [](std::uint64_t i) { return static_cast<int>(i); }};
    std::vector<int> notes{60, 0, 127};
    sort_domain<int>(notes, midi);
    EXPECT_EQ(notes, (std::vector<int>{0, 60, 127}));
}

TEST(SortDomain, GradesMatchComparisonOracle) {
    std::mt19937_64 rng(41);
    const auto codec = grade_codec();
    for (int i = 0; i < 200; ++i) {
        std::vector<Grade> items(rng() % 300);
        for (auto& g : items) g = static_cast<Grade>(rng() % 7);
        const auto expected = oracle_sorted(items, grade_less);
        sort_domain<Grade>(items, codec);
        ASSERT_EQ(items, expected);
    }
}

TEST(SortDomain, DatesMatchComparisonOracle) {
    std::mt19937_64 rng(42);
    const auto codec = day_number_codec();
    for (int i = 0; i < 200; ++i) {
        std::vector<Date> items(rng() % 500);
        for (auto& d : items) {
            const int m = static_cast<int>(rng() % 12) + 1;
            d = {m, static_cast<int>(rng() % kMonthDays[m - 1]) + 1};
        }
        const auto expected = oracle_sorted(items, date_less);
        sort_domain<Date>(items, codec);
        ASSERT_EQ(items, expected);
    }
}

TEST(SortDomain, OutOfRangeEncodingIsCodecError) {
    DomainCodec<int> narrow{Universe(10), [](const int& n) { return static_cast<std::uint64_t>(n); },
                            [](std::uint64_t i) { return static_cast<int>(i); }};
    std::vector<int> items{1, 2, 10};
    EXPECT_THROW(sort_domain<int>(items, narrow), codec_error);
}

TEST(SortDomain, EncodeOncePerItemDecodeOncePerOccupiedCell) {
    std::atomic<int> encodes{0}, decodes{0};
    const auto base = grade_codec();
    DomainCodec<Grade> counted{base.universe,
                               [&](const Grade& g) {
                                   ++encodes;
                                   return base.encode(g);
                               },
                               [&](std::uint64_t i) {
                                   ++decodes;
                                   return base.decode(i);
                               }};
    std::vector<Grade> items{Grade::A, Grade::A, Grade::C, Grade::S, Grade::C, Grade::A};
    sort_domain<Grade>(items, counted);
    EXPECT_EQ(encodes.load(), 6);
    EXPECT_EQ(decodes.load(), 3);
    EXPECT_LE(decodes.load(), 7);
}

TEST(ValidateCodec, AllBytesRoundTrip) {
    std::vector<unsigned char> all(256);
    for (int i = 0; i < 256; ++i) all[i] = static_cast<unsigned char>(i);
    EXPECT_TRUE(validate_codec<unsigned char>(byte_codec(), all));
}

TEST(ValidateCodec, SwappedDecodeTableFails) {
    DomainCodec<Grade> broken = grade_codec();
    broken.decode = [](std::uint64_t i) {
        auto table = kGradeByRank;
        std::swap(table[1], table[2]);
        return table[i];
    };
    const std::vector<Grade> samples{Grade::C, Grade::A, Grade::F, Grade::B, Grade::D, Grade::E, Grade::S};
    EXPECT_FALSE(validate_codec<Grade>(broken, samples, grade_less));
    EXPECT_TRUE(validate_codec<Grade>(grade_codec(), samples, grade_less));
}

TEST(ValidateCodec, OrderReversingEncodeFails) {
    DomainCodec<int> reversed{Universe(10), [](const int& n) { return static_cast<std::uint64_t>(9 - n); },
                              [](std::uint64_t i) { return 9 - static_cast<int>(i); }};
    const std::vector<int> samples{0, 3, 9};
    EXPECT_FALSE(validate_codec<int>(reversed, samples));
}

TEST(ValidateCodec, EmptySampleIsVacuouslyValid) {
    EXPECT_TRUE(validate_codec<Grade>(grade_codec(), {}, grade_less));
}

TEST(ValidateCodec, DateRoundTripOverWholeYear) {
    const auto codec = day_number_codec();
    std::vector<Date> year;
    for (int m = 1; m <= 12; ++m)
        for (int d = 1; d <= kMonthDays[m - 1]; ++d) year.push_back({m, d});
    ASSERT_EQ(year.size(), 366u);
    EXPECT_TRUE(validate_codec<Date>(codec, year, date_less));
    for (std::uint64_t i = 0; i < 366; ++i) {
        ASSERT_EQ(codec.encode(codec.decode(i)), i);
    }
}

} // namespace
} // namespace dialsort
