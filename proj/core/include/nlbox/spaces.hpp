#pragma once

#include <vector>

#include "nlbox/bitvec.hpp"

namespace nlbox {

// All length-n vectors with an odd number of ones, in lexicographic order.
// These are the admissible measurement inputs. Requires even n in [2, 16].
std::vector<BitVec> enumerate_inputs(int n);

// All length-n vectors with an even number of ones, in lexicographic order.
// These are the admissible translations; the set contains 0...0 and 1...1.
std::vector<BitVec> enumerate_translations(int n);

// True for n < 6. Small even spaces are valid but sit below the regime the
// reference dataset is built for, so callers may want to note it in reports.
bool below_reference_regime(int n);

// Evaluates the four admissibility relations between one input of each party:
//   x.(y xor reverse(y)) = 1,   (x xor reverse(x)).y = 1,
//   reverse(x).y = x.reverse(y),   x.y = reverse(x).reverse(y).
bool check_admissibility(BitVec x, BitVec y);

// True iff the XOR of every odd-size tuple of space elements stays in the
// space. Exhaustive over triples for n <= 6, sampled (trials tuples of size
// 3 and 5, fixed internal seed) above that.
bool odd_sum_closure_check(const std::vector<BitVec>& space, int trials);

} // namespace nlbox
