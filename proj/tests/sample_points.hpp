#pragma once

#include <array>

namespace test_points {

struct SamplePoint {
  const char* label;
  const char* a;
  const char* b;
  const char* zone;  // E' is a sub-region of E
};

inline constexpr std::array<SamplePoint, 16> kCaptionPoints{{
    {"A", "-2", "3", "A"},
    {"B", "-2", "1/2", "B"},
    {"C", "-16", "1/10", "C"},
    {"D", "-2", "-1/2", "D"},
    {"E", "-2", "-1", "E"},
    {"E'", "-14/1000", "-15/100", "E"},
    {"F", "-2", "-5/2", "F"},
    {"G", "-2", "-4", "G"},
    {"H", "1", "-1", "H"},
    {"I", "5/100", "-20/100", "I"},
    {"J", "5/100", "-12/100", "J"},
    {"K", "5/100", "-9/100", "K"},
    {"L", "22/100", "1/100", "L"},
    {"M", "28/100", "1/100", "M"},
    {"N", "295/1000", "1/100", "N"},
    {"P", "1", "1", "P"},
}};

}  // namespace test_points
