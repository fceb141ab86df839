#include "nlbox/symmetry.hpp"

#include "nlbox/spaces.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace nlbox {

namespace {

int word_parity(Word w)
{
    return std::popcount(w) & 1;
}

int word_dot(Word a, Word b)
{
    return std::popcount(a & b) & 1;
}

// Depth-first search over matrix rows in increasing word order; every emitted
// row tuple has pairwise-orthogonal odd-parity rows, i.e. RR^t = I, which over
// GF(2) is the same as R^t R = I. visit returns false to stop the search.
bool orthogonal_rows_rec(int n, std::vector<Word>& rows,
                         const std::function<bool(const std::vector<Word>&)>& visit)
{
    if (static_cast<int>(rows.size()) == n)
        return visit(rows);
    Word end = Word{1} << n;
    for (Word cand = 0; cand < end; ++cand) {
        if (word_parity(cand) == 0)
            continue;
        bool ok = true;
        for (Word prev : rows) {
            if (word_dot(prev, cand)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        rows.push_back(cand);
        bool keep_going = orthogonal_rows_rec(n, rows, visit);
        rows.pop_back();
        if (!keep_going)
            return false;
    }
    return true;
}

void for_each_orthogonal(int n, const std::function<bool(const std::vector<Word>&)>& visit)
{
    if (n < 1 || n > 8)
        throw FeasibilityError("orthogonal enumeration supported for n in [1, 8], got " +
                               std::to_string(n));
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(n));
    orthogonal_rows_rec(n, rows, visit);
}

BitMatrix matrix_from_words(int n, const std::vector<Word>& rows)
{
    std::vector<BitVec> rs;
    rs.reserve(rows.size());
    for (Word w : rows)
        rs.emplace_back(n, w);
    return BitMatrix(std::move(rs));
}

} // namespace

SymmetryElement make_symmetry(BitMatrix R, BitVec T)
{
    if (R.n() != T.n())
        throw LengthError("matrix size " + std::to_string(R.n()) +
                          " does not match translation length " + std::to_string(T.n()));
    if (!is_orthogonal(R))
        throw FeasibilityError("matrix is not orthogonal (RtR != I)");
    if (parity(T) != 0)
        throw ParityError("translation must have even parity, got " + T.str());
    return SymmetryElement{std::move(R), T};
}

SymmetryElement identity_element(int n)
{
    return SymmetryElement{BitMatrix::identity(n), BitVec::zero(n)};
}

BitVec apply_symmetry(const SymmetryElement& f, BitVec x)
{
    return mat_apply(f.R, x) ^ f.T;
}

SymmetryElement compose(const SymmetryElement& outer, const SymmetryElement& inner)
{
    return make_symmetry(mat_mul(outer.R, inner.R), mat_apply(outer.R, inner.T) ^ outer.T);
}

SymmetryElement invert(const SymmetryElement& f)
{
    BitMatrix rt = mat_transpose(f.R);
    BitVec t = mat_apply(rt, f.T);
    return make_symmetry(std::move(rt), t);
}

int symmetry_defect(const SymmetryElement& f, BitVec x, BitVec y)
{
    BitVec image = mat_apply(f.R, x ^ y) ^ f.T;
    return inner_product(f.T, image);
}

std::vector<int> anf_of_truth_table(std::vector<int> table)
{
    std::size_t size = table.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw RangeError("truth table size must be a power of two, got " + std::to_string(size));
    if (size > (std::size_t{1} << 16))
        throw FeasibilityError("truth table larger than 2^16 entries");
    for (int v : table)
        if (v != 0 && v != 1)
            throw RangeError("truth table entries must be 0 or 1");
    for (std::size_t bit = 1; bit < size; bit <<= 1)
        for (std::size_t m = 0; m < size; ++m)
            if (m & bit)
                table[m] ^= table[m ^ bit];
    return table;
}

int anf_degree(const std::vector<int>& coeffs)
{
    int degree = -1;
    for (std::size_t m = 0; m < coeffs.size(); ++m)
        if (coeffs[m] != 0)
            degree = std::max(degree, std::popcount(m));
    return degree;
}

std::vector<int> component_anf(const SymmetryElement& f, int component)
{
    int n = f.T.n();
    if (n > 16)
        throw FeasibilityError("component truth table needs 2^n entries; n = " +
                               std::to_string(n) + " exceeds 16");
    if (component < 1 || component > n)
        throw RangeError("component " + std::to_string(component) + " outside [1, " +
                         std::to_string(n) + "]");
    std::vector<int> table(std::size_t{1} << n);
    for (std::size_t u = 0; u < table.size(); ++u)
        table[u] = apply_symmetry(f, BitVec(n, static_cast<Word>(u))).get(component);
    return anf_of_truth_table(std::move(table));
}

OrthogonalEnumeration enumerate_orthogonal(int n, std::size_t limit)
{
    OrthogonalEnumeration out;
    for_each_orthogonal(n, [&](const std::vector<Word>& rows) {
        if (limit != 0 && out.matrices.size() == limit) {
            out.truncated = true;
            return false;
        }
        out.matrices.push_back(matrix_from_words(n, rows));
        return true;
    });
    return out;
}

int symmetry_parameter_W(BitVec x1, BitVec x2, BitVec y1, BitVec y2)
{
    BitVec dy = y1 ^ y2;
    int sign1 = inner_product(x1, dy) ? -1 : 1;
    int sign2 = inner_product(x2, dy) ? -1 : 1;
    return (1 - sign1) * (1 + sign2) / 4;
}

std::size_t expected_subset_count(int n)
{
    if (n < 4 || n > 62 || n % 2 != 0)
        throw RangeError("subset count defined for even n in [4, 62], got " + std::to_string(n));
    std::uint64_t total = (std::uint64_t{1} << (n - 1)) - 2;
    std::uint64_t per_subset = (std::uint64_t{1} << (n / 2)) - 2;
    return static_cast<std::size_t>(total / per_subset);
}

namespace {

// Builds the exact cover of the middle translations (even-parity words other
// than 0 and 1...1) by maximal self-orthogonal XOR-closed subsets. Subsets are
// grown from the lexicographically least uncovered word; within a subset, new
// generators are chosen in increasing order and each must be the least member
// of the coset it adds, so every candidate subspace is visited exactly once.
struct SpreadBuilder {
    int n = 0;
    Word all_ones = 0;
    std::size_t subset_size = 0;
    std::vector<char> covered;
    std::size_t uncovered = 0;
    std::vector<std::vector<Word>> subsets;

    bool solve()
    {
        if (uncovered == 0)
            return true;
        Word end = Word{1} << n;
        Word t0 = 0;
        for (Word w = 3; w < end; ++w) {
            if (word_parity(w) == 0 && w != all_ones && !covered[w]) {
                t0 = w;
                break;
            }
        }
        std::vector<Word> span = {0, t0, all_ones ^ t0, all_ones};
        std::sort(span.begin(), span.end());
        return extend(span, t0);
    }

    bool extend(std::vector<Word>& span, Word last)
    {
        if (span.size() == subset_size)
            return commit(span);
        Word end = Word{1} << n;
        for (Word v = last + 1; v < end; ++v) {
            if (word_parity(v) || covered[v])
                continue;
            bool ok = true;
            for (Word s : span) {
                if (word_dot(v, s)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            for (Word s : span) {
                if (s == 0)
                    continue;
                Word w = v ^ s;
                if (w < v || covered[w]) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            std::size_t old_size = span.size();
            for (std::size_t i = 0; i < old_size; ++i)
                span.push_back(v ^ span[i]);
            if (extend(span, v))
                return true;
            span.resize(old_size);
        }
        return false;
    }

    bool commit(const std::vector<Word>& span)
    {
        std::vector<Word> members(span);
        std::sort(members.begin(), members.end());
        for (Word w : members)
            if (w != 0 && w != all_ones)
                covered[w] = 1;
        uncovered -= subset_size - 2;
        subsets.push_back(members);
        if (solve())
            return true;
        subsets.pop_back();
        uncovered += subset_size - 2;
        for (Word w : members)
            if (w != 0 && w != all_ones)
                covered[w] = 0;
        return false;
    }
};

} // namespace

Partition partition_by_symmetry(int n)
{
    if (n % 2 != 0 || n < 6 || n > 12)
        throw RangeError("partition defined for even n in [6, 12], got " + std::to_string(n));
    SpreadBuilder builder;
    builder.n = n;
    builder.all_ones = (Word{1} << n) - 1;
    builder.subset_size = std::size_t{1} << (n / 2);
    builder.covered.assign(std::size_t{1} << n, 0);
    builder.uncovered = (std::size_t{1} << (n - 1)) - 2;
    if (!builder.solve())
        throw FeasibilityError("translation cover construction failed for n = " +
                               std::to_string(n));

    Partition p;
    p.n = n;
    p.x_ref = BitVec(n, 1);
    int index = 1;
    for (const auto& members : builder.subsets) {
        SymmetrySubset s;
        s.index = index++;
        s.T.reserve(members.size());
        for (Word w : members)
            s.T.emplace_back(n, w);
        std::vector<Word> xs(members);
        for (Word& w : xs)
            w ^= p.x_ref.word();
        std::sort(xs.begin(), xs.end());
        s.X.reserve(xs.size());
        for (Word w : xs)
            s.X.emplace_back(n, w);
        s.Y = s.X;
        p.subsets.push_back(std::move(s));
    }
    return p;
}

bool subset_stabilizer_check(const BitMatrix& R, const std::vector<BitVec>& translations)
{
    if (!is_orthogonal(R))
        return false;
    std::vector<BitVec> sorted(translations);
    std::sort(sorted.begin(), sorted.end());
    for (const BitVec& t : translations)
        if (!std::binary_search(sorted.begin(), sorted.end(), mat_apply(R, t)))
            return false;
    return true;
}

std::vector<BitMatrix> subset_stabilizers(const std::vector<BitVec>& translations,
                                          std::size_t limit)
{
    if (translations.empty())
        throw RangeError("stabilizer search needs a non-empty translation set");
    int n = translations[0].n();
    std::vector<BitVec> sorted(translations);
    std::sort(sorted.begin(), sorted.end());
    std::vector<BitMatrix> out;
    for_each_orthogonal(n, [&](const std::vector<Word>& rows) {
        BitMatrix m = matrix_from_words(n, rows);
        bool stabilizes = true;
        for (const BitVec& t : sorted) {
            if (!std::binary_search(sorted.begin(), sorted.end(), mat_apply(m, t))) {
                stabilizes = false;
                break;
            }
        }
        if (stabilizes) {
            out.push_back(std::move(m));
            if (limit != 0 && out.size() == limit)
                return false;
        }
        return true;
    });
    return out;
}

namespace {

bool contains(const std::vector<BitVec>& sorted, BitVec v)
{
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<BitVec> sorted_copy(const std::vector<BitVec>& vs)
{
    std::vector<BitVec> out(vs);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<CheckResult> verify_partition(const Partition& p)
{
    std::vector<CheckResult> out;
    int n = p.n;
    BitVec zero = BitVec::zero(n);
    BitVec ones = BitVec::ones(n);
    std::size_t want_subsets = expected_subset_count(n);
    std::size_t want_size = std::size_t{1} << (n / 2);

    out.push_back({"subset_count", p.subsets.size() == want_subsets,
                   std::to_string(p.subsets.size()) + " subsets, expected " +
                       std::to_string(want_subsets)});

    bool sizes_ok = true;
    for (const auto& s : p.subsets)
        sizes_ok = sizes_ok && s.T.size() == want_size && s.X.size() == want_size &&
                   s.Y.size() == want_size;
    out.push_back({"subset_sizes", sizes_ok,
                   "every T_m, X_m, Y_m has " + std::to_string(want_size) + " members"});

    bool endpoints_ok = true;
    bool closed_ok = true;
    bool orth_ok = true;
    bool coset_ok = true;
    std::string closed_detail = "every T_m closed under XOR";
    std::string orth_detail = "all pairwise inner products vanish";
    std::string coset_detail = "X_m = Y_m = x_ref ^ T_m for every subset";
    for (const auto& s : p.subsets) {
        std::vector<BitVec> st = sorted_copy(s.T);
        endpoints_ok = endpoints_ok && contains(st, zero) && contains(st, ones);
        for (std::size_t i = 0; i < s.T.size() && closed_ok; ++i)
            for (std::size_t j = i; j < s.T.size(); ++j)
                if (!contains(st, s.T[i] ^ s.T[j])) {
                    closed_ok = false;
                    closed_detail = "subset " + std::to_string(s.index) + ": " + s.T[i].str() +
                                    " ^ " + s.T[j].str() + " missing";
                    break;
                }
        for (std::size_t i = 0; i < s.T.size() && orth_ok; ++i)
            for (std::size_t j = i; j < s.T.size(); ++j)
                if (inner_product(s.T[i], s.T[j]) != 0) {
                    orth_ok = false;
                    orth_detail = "subset " + std::to_string(s.index) + ": " + s.T[i].str() +
                                  " . " + s.T[j].str() + " = 1";
                    break;
                }
        std::vector<BitVec> expect;
        expect.reserve(s.T.size());
        for (const BitVec& t : s.T)
            expect.push_back(p.x_ref ^ t);
        std::sort(expect.begin(), expect.end());
        if (sorted_copy(s.X) != expect || sorted_copy(s.Y) != expect) {
            coset_ok = false;
            coset_detail = "subset " + std::to_string(s.index) + " is not the x_ref coset";
        }
    }
    out.push_back({"subset_endpoints", endpoints_ok, "every T_m contains " + zero.str() +
                                                         " and " + ones.str()});
    out.push_back({"xor_closed", closed_ok, closed_detail});
    out.push_back({"self_orthogonal", orth_ok, orth_detail});
    out.push_back({"coset_structure", coset_ok, coset_detail});

    bool inter_ok = true;
    std::string inter_detail = "pairwise T intersections equal {" + zero.str() + ", " +
                               ones.str() + "}";
    for (std::size_t a = 0; a < p.subsets.size() && inter_ok; ++a) {
        std::vector<BitVec> sa = sorted_copy(p.subsets[a].T);
        for (std::size_t b = a + 1; b < p.subsets.size() && inter_ok; ++b) {
            std::vector<BitVec> common;
            for (const BitVec& t : p.subsets[b].T)
                if (contains(sa, t))
                    common.push_back(t);
            std::sort(common.begin(), common.end());
            if (common != std::vector<BitVec>{zero, ones}) {
                inter_ok = false;
                inter_detail = "subsets " + std::to_string(p.subsets[a].index) + " and " +
                               std::to_string(p.subsets[b].index) + " share " +
                               std::to_string(common.size()) + " translations";
            }
        }
    }
    out.push_back({"pairwise_intersection", inter_ok, inter_detail});

    std::vector<BitVec> all_t;
    std::vector<BitVec> all_x;
    for (const auto& s : p.subsets) {
        all_t.insert(all_t.end(), s.T.begin(), s.T.end());
        all_x.insert(all_x.end(), s.X.begin(), s.X.end());
    }
    std::sort(all_t.begin(), all_t.end());
    all_t.erase(std::unique(all_t.begin(), all_t.end()), all_t.end());
    std::sort(all_x.begin(), all_x.end());
    all_x.erase(std::unique(all_x.begin(), all_x.end()), all_x.end());
    bool cover_ok = all_t == enumerate_translations(n) && all_x == enumerate_inputs(n);
    out.push_back({"cover", cover_ok, "T_m union covers all translations, X_m union all inputs"});

    bool w_ok = true;
    std::size_t quads = 0;
    std::string w_detail;
    for (const auto& s : p.subsets) {
        for (const BitVec& x1 : s.X)
            for (const BitVec& x2 : s.X)
                for (const BitVec& y1 : s.Y)
                    for (const BitVec& y2 : s.Y) {
                        ++quads;
                        if (symmetry_parameter_W(x1, x2, y1, y2) != 0) {
                            w_ok = false;
                            w_detail = "subset " + std::to_string(s.index) + ": W = 1 at (" +
                                       x1.str() + ", " + x2.str() + ", " + y1.str() + ", " +
                                       y2.str() + ")";
                        }
                    }
        if (!w_ok)
            break;
    }
    if (w_ok)
        w_detail = "W = 0 on all " + std::to_string(quads) + " within-subset quadruples";
    out.push_back({"within_subset_W", w_ok, w_detail});

    return out;
}

} // namespace nlbox
