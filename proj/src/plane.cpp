#include "copbench/plane.hpp"

#include <algorithm>

#include "copbench/errors.hpp"
#include "copbench/gf.hpp"

namespace copbench {

namespace {

void verify_plane(const ProjectivePlane& pl) {
    const int q = pl.q;
    const int N = q * q + q + 1;
    check(pl.num_points() == N, "plane point count");
    check(static_cast<int>(pl.lines.size()) == N, "plane line count");
    std::vector<int> lines_through(N, 0);
    for (const auto& line : pl.lines) {
        check(static_cast<int>(line.size()) == q + 1, "line size");
        for (int p : line) lines_through[p]++;
    }
    for (int p = 0; p < N; ++p) check(lines_through[p] == q + 1, "point degree");
    // any two distinct points lie on exactly one common line
    std::vector<std::vector<char>> on(N, std::vector<char>(N, 0));
    for (int li = 0; li < N; ++li)
        for (int p : pl.lines[li]) on[li][p] = 1;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            int common = 0;
            for (int li = 0; li < N; ++li)
                if (on[li][a] && on[li][b]) ++common;
            check(common == 1, "two points must lie on exactly one line");
        }
}

} // namespace

ProjectivePlane projective_plane(int q) {
    GaloisField f(q); // NotAPrimePower
    ProjectivePlane pl;
    pl.q = q;
    // normalized representatives of the 1-dimensional subspaces of GF(q)^3
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pl.points.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pl.points.push_back({0, 1, z});
    pl.points.push_back({0, 0, 1});

    auto dot = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        int s = 0;
        for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
        return s;
    };
    const int N = pl.num_points();
    pl.lines.resize(N);
    for (int li = 0; li < N; ++li) {
        for (int pi = 0; pi < N; ++pi)
            if (dot(pl.points[li], pl.points[pi]) == 0) pl.lines[li].push_back(pi);
        std::sort(pl.lines[li].begin(), pl.lines[li].end());
    }
    verify_plane(pl);
    return pl;
}

} // namespace copbench
