#pragma once

#include "nlbox/bitvec.hpp"
#include "nlbox/errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nlbox {

// Affine map x -> Rx ^ T with orthogonal R (RtR = I) and even-parity T.
struct SymmetryElement {
    BitMatrix R;
    BitVec T;
};

inline bool operator==(const SymmetryElement& a, const SymmetryElement& b)
{
    return a.R == b.R && a.T == b.T;
}

inline bool operator!=(const SymmetryElement& a, const SymmetryElement& b)
{
    return !(a == b);
}

SymmetryElement make_symmetry(BitMatrix R, BitVec T);
SymmetryElement identity_element(int n);
BitVec apply_symmetry(const SymmetryElement& f, BitVec x);
// compose(outer, inner) applies inner first: x -> outer(inner(x)).
SymmetryElement compose(const SymmetryElement& outer, const SymmetryElement& inner);
SymmetryElement invert(const SymmetryElement& f);

// Defect bit T.[R(x^y) ^ T]; zero iff f preserves the correlation x.y.
int symmetry_defect(const SymmetryElement& f, BitVec x, BitVec y);

// In-place Moebius transform of a truth table with 2^k entries. table[u]
// indexes inputs by integer value (textual position 1 = most significant bit);
// coefficient m multiplies the monomial over the variable set encoded by m.
std::vector<int> anf_of_truth_table(std::vector<int> table);
// Largest monomial weight with a nonzero coefficient; -1 for the zero function.
int anf_degree(const std::vector<int>& coeffs);
// ANF of output component `component` (1-based textual position) of f.
std::vector<int> component_anf(const SymmetryElement& f, int component);

struct OrthogonalEnumeration {
    std::vector<BitMatrix> matrices;
    bool truncated = false;
};
// All R with RtR = I, in row-tuple lexicographic order. limit 0 means
// unbounded; otherwise at most `limit` matrices are returned and `truncated`
// reports whether more exist.
OrthogonalEnumeration enumerate_orthogonal(int n, std::size_t limit = 0);

// W = (1/4)[1 - (-1)^(x1.(y1^y2))][1 + (-1)^(x2.(y1^y2))], in {0, 1}.
int symmetry_parameter_W(BitVec x1, BitVec x2, BitVec y1, BitVec y2);

struct SymmetrySubset {
    int index = 0;
    std::vector<BitVec> T;
    std::vector<BitVec> X;
    std::vector<BitVec> Y;
    std::vector<BitMatrix> R; // sample stabilizers; may be empty
};

struct Partition {
    int n = 0;
    BitVec x_ref;
    std::vector<SymmetrySubset> subsets;
};

// (2^(n-1) - 2) / (2^(n/2) - 2), the number of subsets in a full partition.
std::size_t expected_subset_count(int n);

// Partitions the translation space into maximal XOR-closed self-orthogonal
// subsets containing {0...0, 1...1}, pairwise intersecting exactly there, and
// attaches the input cosets X_m = Y_m = x_ref ^ T_m with x_ref the
// lexicographically least input. Deterministic: subsets are grown by always
// extending the lexicographically least uncovered translation.
Partition partition_by_symmetry(int n);

bool subset_stabilizer_check(const BitMatrix& R, const std::vector<BitVec>& translations);
// Orthogonal matrices mapping the translation set to itself, in enumeration
// order, at most `limit` of them (0 means unbounded).
std::vector<BitMatrix> subset_stabilizers(const std::vector<BitVec>& translations,
                                          std::size_t limit = 0);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> verify_partition(const Partition& p);

} // namespace nlbox
