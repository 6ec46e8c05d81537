#pragma once

#include <array>

namespace pqclan::cli {

// Reference rows for S_31425 * S_14253, in published order.
struct ReferenceRow {
    const char* word;
    const char* image;
    int constant;
};

inline constexpr std::array<ReferenceRow, 20> table1_reference = {{
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

}  // namespace pqclan::cli
