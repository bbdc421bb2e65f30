#pragma once

#include <array>
#include <vector>

namespace copbench {

// The classical projective plane PG(2,q): points are the 1-dimensional
// subspaces of GF(q)^3 (normalized so the first nonzero coordinate is 1),
// lines are the orthogonal complements of points. q^2+q+1 points and
// lines, q+1 points per line, q+1 lines per point, any two points on
// exactly one common line. All of this is verified on construction.
struct ProjectivePlane {
    int q = 0;
    std::vector<std::array<int, 3>> points; // homogeneous coordinates over GF(q)
    std::vector<std::vector<int>> lines;    // sorted point indices

    int num_points() const { return static_cast<int>(points.size()); }
};

ProjectivePlane projective_plane(int q); // NotAPrimePower

} // namespace copbench
