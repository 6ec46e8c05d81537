#pragma once

#include <array>

// S_31425 * S_14253 over the clan (+,-,+,-,+): every length-6 element of S_5 as printed in the
// published table, with its image clan and structure constant.
namespace pqclan::testing {

struct Table1Row {
    const char* word;
    const char* image;
    int constant;
};

inline constexpr std::array<Table1Row, 20> table1 = {{
    {"[4, 3, 2, 4, 3, 4]", "(+,1,2,2,1)", 0},
    {"[1, 3, 2, 4, 3, 4]", "(1,+,2,2,1)", 0},
    {"[1, 4, 3, 2, 3, 4]", "(1,+,2,2,1)", 0},
    {"[1, 4, 3, 2, 4, 3]", "(1,+,2,2,1)", 0},
    {"[2, 1, 2, 4, 3, 4]", "(1,2,2,+,1)", 0},
    {"[2, 1, 3, 2, 3, 4]", "(1,2,+,2,1)", 1},
    {"[2, 1, 3, 2, 4, 3]", "(1,2,+,2,1)", 1},
    {"[2, 1, 4, 3, 2, 4]", "(1,2,+,2,1)", 1},
    {"[2, 1, 4, 3, 2, 3]", "(1,2,2,+,1)", 0},
    {"[3, 2, 1, 4, 3, 4]", "(1,2,+,1,2)", 0},
    {"[3, 2, 1, 2, 3, 4]", "(1,2,+,2,1)", 1},
    {"[3, 2, 1, 2, 4, 3]", "(1,2,+,2,1)", 1},
    {"[3, 2, 1, 3, 2, 4]", "(1,2,+,1,2)", 0},
    {"[3, 2, 1, 3, 2, 3]", "(1,2,2,1,+)", 0},
    {"[3, 2, 1, 4, 3, 2]", "(1,2,+,2,1)", 1},
    {"[4, 3, 2, 1, 3, 4]", "(1,2,+,2,1)", 1},
    {"[4, 3, 2, 1, 4, 3]", "(1,2,+,2,1)", 1},
    {"[4, 3, 2, 1, 2, 4]", "(1,+,2,2,1)", 0},
    {"[4, 3, 2, 1, 2, 3]", "(1,2,2,+,1)", 0},
    {"[4, 3, 2, 1, 3, 2]", "(1,2,2,+,1)", 0},
}};

}  // namespace pqclan::testing
