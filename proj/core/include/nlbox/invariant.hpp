#pragma once

#include <functional>
#include <vector>

#include "nlbox/bitvec.hpp"

namespace nlbox {

// Correlation of the rotation-invariant model: E = -cos(theta_x - theta_y).
// Depends on the two angles only through their difference.
double invariant_E(double theta_x, double theta_y);

// The same correlation written against the two parity coefficients:
//   sin^2(theta/2) * (-1)^(x.y) + cos^2(theta/2) * (-1)^(x.reverse(y)).
// Requires an admissible pair, so the two powers of -1 always disagree.
double coefficient_form_E(const BitVec& x, const BitVec& y, double theta);

// One angle per admissible input of a length-n space. Complementary inputs
// differ by pi and the lexicographically least input carries angle zero.
struct AngleAssignment {
    int n = 0;
    std::vector<BitVec> inputs;  // lexicographic, as enumerated for the space
    std::vector<double> angles;  // parallel to inputs
    double angle_of(const BitVec& x) const;
};

// Builds the assignment from one angle per complement pair, listed for the
// lex-smaller representative of each pair in lexicographic order. The first
// entry must be zero.
AngleAssignment assign_angles(int n, const std::vector<double>& representative_angles);

// Evenly spaced representatives: pair i carries angle i * pi / pair_count.
AngleAssignment default_angles(int n);

struct AngleScanRow {
    double tx1 = 0.0;
    double tx2 = 0.0;
    double ty1 = 0.0;
    double ty2 = 0.0;
    double s = 0.0;
};

// Calls fn for every four-angle combination theta = 2 pi k / grid,
// k = 0 .. grid-1 per setting, in ascending (k_x1, k_x2, k_y1, k_y2) order.
// Requires grid >= 8 and grid divisible by 8 so the quarter-pi points that
// maximize S lie on the grid.
void scan_angles(int grid, const std::function<void(const AngleScanRow&)>& fn);

// Largest S over the grid and the first combination attaining it.
AngleScanRow chsh_max_over_angles(int grid);

}  // namespace nlbox
