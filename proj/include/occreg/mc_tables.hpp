#pragma once

namespace occreg::mc {

// Corner order (x,y,z): 0 (0,0,0) 1 (1,0,0) 2 (1,1,0) 3 (0,1,0)
//                       4 (0,0,1) 5 (1,0,1) 6 (1,1,1) 7 (0,1,1).
// Bit i of a case index is set when corner i lies below the iso level.
extern const int kEdgeTable[256];
extern const int kTriTable[256][16];

inline constexpr int kCornerOffset[8][3] = {
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
};

inline constexpr int kEdgeCorners[12][2] = {
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
    {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
};

}  // namespace occreg::mc
