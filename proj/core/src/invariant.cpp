#include "nlbox/invariant.hpp"

#include <cmath>
#include <string>

#include "nlbox/errors.hpp"
#include "nlbox/spaces.hpp"

namespace nlbox {

double invariant_E(double theta_x, double theta_y)
{
    return -std::cos(theta_x - theta_y);
}

double coefficient_form_E(const BitVec& x, const BitVec& y, double theta)
{
    if (!check_admissibility(x, y))
        throw AdmissibilityError("settings pair (" + x.str() + ", " + y.str() +
                                 ") violates the admissibility relations");
    const double s = std::sin(theta / 2.0);
    const double c = std::cos(theta / 2.0);
    const double direct = inner_product(x, y) ? -1.0 : 1.0;
    const double reversed = inner_product(x, reverse(y)) ? -1.0 : 1.0;
    return s * s * direct + c * c * reversed;
}

double AngleAssignment::angle_of(const BitVec& x) const
{
    for (std::size_t i = 0; i < inputs.size(); ++i)
        if (inputs[i] == x)
            return angles[i];
    throw RangeError("no angle assigned to " + x.str());
}

AngleAssignment assign_angles(int n, const std::vector<double>& representative_angles)
{
    AngleAssignment out;
    out.n = n;
    out.inputs = enumerate_inputs(n);
    out.angles.assign(out.inputs.size(), 0.0);

    // Representatives are the lex-smaller element of each complement pair.
    std::vector<std::size_t> rep_positions;
    for (std::size_t i = 0; i < out.inputs.size(); ++i)
        if (out.inputs[i] < reverse(out.inputs[i]))
            rep_positions.push_back(i);

    if (representative_angles.size() != rep_positions.size())
        throw LengthError("expected " + std::to_string(rep_positions.size()) +
                          " representative angles, got " +
                          std::to_string(representative_angles.size()));
    if (representative_angles.front() != 0.0)
        throw RangeError("the lexicographically least input must carry angle zero");

    for (std::size_t r = 0; r < rep_positions.size(); ++r) {
        const std::size_t i = rep_positions[r];
        out.angles[i] = representative_angles[r];
        // Complements sit somewhere in the same list; find and shift by pi.
        const BitVec comp = reverse(out.inputs[i]);
        for (std::size_t j = 0; j < out.inputs.size(); ++j)
            if (out.inputs[j] == comp) {
                out.angles[j] = representative_angles[r] + std::acos(-1.0);
                break;
            }
    }
    return out;
}

AngleAssignment default_angles(int n)
{
    const std::size_t pairs = enumerate_inputs(n).size() / 2;
    std::vector<double> reps(pairs, 0.0);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < pairs; ++i)
        reps[i] = static_cast<double>(i) * pi / static_cast<double>(pairs);
    return assign_angles(n, reps);
}

void scan_angles(int grid, const std::function<void(const AngleScanRow&)>& fn)
{
    if (grid < 8 || grid % 8 != 0)
        throw RangeError("angle grid must be a positive multiple of 8, at least 8, got " +
                         std::to_string(grid));
    const double pi = std::acos(-1.0);
    std::vector<double> theta(static_cast<std::size_t>(grid));
    // E depends only on the index difference mod grid; precompute it.
    std::vector<double> corr(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        theta[static_cast<std::size_t>(k)] = 2.0 * pi * k / grid;
        corr[static_cast<std::size_t>(k)] = -std::cos(2.0 * pi * k / grid);
    }
    auto diff = [grid](int a, int b) { return static_cast<std::size_t>(((a - b) % grid + grid) % grid); };

    AngleScanRow row;
    for (int kx1 = 0; kx1 < grid; ++kx1)
        for (int kx2 = 0; kx2 < grid; ++kx2)
            for (int ky1 = 0; ky1 < grid; ++ky1)
                for (int ky2 = 0; ky2 < grid; ++ky2) {
                    const double e11 = corr[diff(kx1, ky1)];
                    const double e12 = corr[diff(kx1, ky2)];
                    const double e21 = corr[diff(kx2, ky1)];
                    const double e22 = corr[diff(kx2, ky2)];
                    row.tx1 = theta[static_cast<std::size_t>(kx1)];
                    row.tx2 = theta[static_cast<std::size_t>(kx2)];
                    row.ty1 = theta[static_cast<std::size_t>(ky1)];
                    row.ty2 = theta[static_cast<std::size_t>(ky2)];
                    row.s = std::abs(e11 - e12) + std::abs(e21 + e22);
                    fn(row);
                }
}

AngleScanRow chsh_max_over_angles(int grid)
{
    AngleScanRow best;
    bool have = false;
    scan_angles(grid, [&](const AngleScanRow& row) {
        if (!have || row.s > best.s) {
            have = true;
            best = row;
        }
    });
    return best;
}

}  // namespace nlbox
