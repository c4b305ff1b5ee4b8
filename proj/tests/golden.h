#pragma once

// Reference listings typed in by hand, kept apart from the library catalog
// so that a transcription slip on either side shows up as a test failure.

#include <string_view>

namespace golden {

struct Table {
  std::string_view name;
  std::string_view faces;
  std::string_view bits;
};

inline constexpr Table kTables[] = {
    {"V_0", "[[1,2,6],[2,3,7],[3,4,8],[4,5,1],[5,6,2],[6,7,3],[7,8,4],[8,1,5]]", "11111111"},
    {"V_0^1", "[[1,2,3],[1,4,5],[1,6,4],[2,6,8],[2,8,5],[3,6,7],[3,7,5],[4,8,7]]", "00000000"},
    {"V_0^2", "[[1,2,3],[1,4,5],[1,6,7],[2,4,6],[2,8,5],[3,6,8],[3,7,5],[4,8,7]]", "00000000"},
    {"Vcheck_0^2", "[[1,2,3],[1,4,5],[1,6,7],[2,6,4],[2,8,5],[3,6,8],[3,7,5],[4,8,7]]", "00000000"},
    {"V_4^1", "[[1,1,5],[2,2,5],[3,3,6],[4,4,6],[1,3,8],[2,7,4],[5,8,7],[6,7,8]]", "00000000"},
    {"V_1", "[[1,1,2],[1,3,4],[2,5,6],[2,7,8],[3,5,7],[3,6,5],[4,6,8],[4,8,7]]", "00110000"},
    {"V_2^1", "[[1,1,3],[2,2,3],[1,4,5],[2,7,8],[3,5,7],[4,6,8],[4,7,6],[5,8,6]]", "00110000"},
    {"V_2^2", "[[1,1,3],[2,2,4],[3,7,4],[1,4,6],[2,5,3],[5,7,8],[5,8,6],[6,8,7]]", "11011000"},
    {"V_2^3", "[[1,1,3],[2,2,4],[1,5,2],[3,6,4],[3,7,6],[4,6,8],[5,7,8],[5,8,7]]", "00011100"},
    {"V_2^4", "[[1,1,3],[2,2,4],[1,5,2],[3,6,5],[3,7,8],[4,5,8],[4,6,7],[6,8,7]]", "00011110"},
    {"V_3", "[[1,1,4],[2,2,4],[3,3,5],[1,3,6],[2,5,7],[4,7,8],[5,8,6],[6,8,7]]", "00001110"},
    {"V_4^2", "[[1,1,5],[2,2,5],[3,3,6],[4,4,7],[1,3,8],[2,7,6],[4,8,6],[5,8,7]]", "00110111"},
    {"V_5", "[[1,1,2],[3,3,2],[4,4,2],[5,5,6],[7,7,8],[1,8,6],[3,6,7],[5,8,4]]", "00011000"},
};

inline constexpr std::string_view kX00 =
    "[[x,a,d],[y,c,d],[z,c,b],[1,1,2],[2,a',d'],[4,c',d'],[3,c',b'],"
    "[4,d,a],[3,b,a],[2,b,c],[1,3,4],[x',d',a'],[y',b',a'],[z',b',c']]";

inline constexpr std::string_view kY00 =
    "[[x,a,d],[y,c,d],[z,c,b],[1,2,3],[4,a',d'],[2,c',d'],[1,c',b'],"
    "[1,d,a],[3,b,a],[4,b,c],[2,4,3],[x',d',a'],[y',b',a'],[z',b',c']]";

// The second factor of X00 Y00 after relabeling.
inline constexpr std::string_view kY00Relabeled =
    "[[2,a',d'],[4,c',d'],[3,c',b'],[11,12,13],[14,a'',d''],[12,c'',d''],[11,c'',b''],"
    "[11,d',a'],[13,b',a'],[14,b',c'],[12,14,13],[x'',d'',a''],[y'',b'',a''],[z'',b'',c'']]";

// Link of the single vertex of V_0: a 16-cycle plus chords between cycle
// positions (1,6) (3,8) (5,10) (7,12) (9,14) (11,16) (13,2) (15,4), 1-based.
inline constexpr std::string_view kV0LinkCycle[16] = {"1", "-2", "6", "-7", "3", "-4", "8", "-1",
                                                      "5", "-6", "2", "-3", "7", "-8", "4", "-5"};
inline constexpr int kV0LinkChords[8][2] = {{1, 6}, {3, 8}, {5, 10}, {7, 12}, {9, 14}, {11, 16}, {13, 2}, {15, 4}};

} // namespace golden
