#include "nlbox/bitvec.hpp"

#include <bit>
#include <sstream>

namespace nlbox {

namespace {

Word mask_for(int n)
{
    return n >= 64 ? ~Word{0} : ((Word{1} << n) - 1);
}

} // namespace

BitVec::BitVec(int n, Word bits) : n_(n), bits_(bits)
{
    if (n < 1 || n > 64)
        throw LengthError("bit length must be in [1, 64], got " + std::to_string(n));
    if ((bits & ~mask_for(n)) != 0)
        throw LengthError("bit pattern wider than declared length " + std::to_string(n));
}

BitVec BitVec::ones(int n)
{
    return BitVec(n, mask_for(n));
}

BitVec BitVec::parse(const std::string& text)
{
    if (text.empty() || text.size() > 64)
        throw LengthError("bitstring length must be in [1, 64], got " +
                          std::to_string(text.size()));
    Word bits = 0;
    for (char c : text) {
        bits <<= 1;
        if (c == '1')
            bits |= 1;
        else if (c != '0')
            throw ParseError(std::string("invalid character '") + c + "' in bitstring \"" +
                             text + "\"");
    }
    return BitVec(static_cast<int>(text.size()), bits);
}

std::string BitVec::str() const
{
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int k = 1; k <= n_; ++k)
        if (get(k))
            s[static_cast<std::size_t>(k - 1)] = '1';
    return s;
}

int BitVec::get(int pos) const
{
    if (pos < 1 || pos > n_)
        throw RangeError("bit position " + std::to_string(pos) + " outside [1, " +
                         std::to_string(n_) + "]");
    return static_cast<int>((bits_ >> (n_ - pos)) & 1);
}

BitVec BitVec::with(int pos, int value) const
{
    if (pos < 1 || pos > n_)
        throw RangeError("bit position " + std::to_string(pos) + " outside [1, " +
                         std::to_string(n_) + "]");
    Word bit = Word{1} << (n_ - pos);
    return BitVec(n_, value ? (bits_ | bit) : (bits_ & ~bit));
}

BitVec operator^(BitVec a, BitVec b)
{
    if (a.n_ != b.n_)
        throw LengthError("xor of vectors with lengths " + std::to_string(a.n_) + " and " +
                          std::to_string(b.n_));
    return BitVec(a.n_, a.bits_ ^ b.bits_);
}

int inner_product(BitVec a, BitVec b)
{
    if (a.n() != b.n())
        throw LengthError("inner product of vectors with lengths " + std::to_string(a.n()) +
                          " and " + std::to_string(b.n()));
    return std::popcount(a.word() & b.word()) & 1;
}

BitVec xor_sum(const std::vector<BitVec>& vs)
{
    if (vs.empty())
        throw RangeError("xor_sum needs at least one vector");
    BitVec acc = vs.front();
    for (std::size_t i = 1; i < vs.size(); ++i)
        acc = acc ^ vs[i];
    return acc;
}

BitVec xor_sum(BitVec a, BitVec b)
{
    return a ^ b;
}

int parity(BitVec v)
{
    return std::popcount(v.word()) & 1;
}

BitVec reverse(BitVec v)
{
    return v ^ BitVec::ones(v.n());
}

BitMatrix::BitMatrix(std::vector<BitVec> rows) : n_(static_cast<int>(rows.size())), rows_(std::move(rows))
{
    if (n_ < 1 || n_ > 64)
        throw LengthError("matrix size must be in [1, 64], got " + std::to_string(n_));
    for (const BitVec& r : rows_)
        if (r.n() != n_)
            throw LengthError("matrix row of length " + std::to_string(r.n()) +
                              " in a " + std::to_string(n_) + "x" + std::to_string(n_) +
                              " matrix");
}

BitMatrix BitMatrix::identity(int n)
{
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        rows.push_back(BitVec::zero(n).with(i, 1));
    return BitMatrix(std::move(rows));
}

BitMatrix BitMatrix::parse(const std::string& text)
{
    std::istringstream in(text);
    std::vector<BitVec> rows;
    std::string tok;
    while (in >> tok)
        rows.push_back(BitVec::parse(tok));
    return BitMatrix(std::move(rows));
}

std::string BitMatrix::str() const
{
    std::string out;
    for (int i = 0; i < n_; ++i) {
        out += rows_[static_cast<std::size_t>(i)].str();
        out += '\n';
    }
    return out;
}

BitVec mat_apply(const BitMatrix& m, BitVec x)
{
    if (m.n() != x.n())
        throw LengthError("matrix of size " + std::to_string(m.n()) +
                          " applied to vector of length " + std::to_string(x.n()));
    BitVec y = BitVec::zero(m.n());
    for (int i = 1; i <= m.n(); ++i)
        if (inner_product(m.row(i - 1), x))
            y = y.with(i, 1);
    return y;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b)
{
    if (a.n() != b.n())
        throw LengthError("product of matrices with sizes " + std::to_string(a.n()) + " and " +
                          std::to_string(b.n()));
    int n = a.n();
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Row i of a*b is the XOR of the rows of b selected by row i of a.
        BitVec acc = BitVec::zero(n);
        for (int j = 1; j <= n; ++j)
            if (a.row(i).get(j))
                acc = acc ^ b.row(j - 1);
        rows.push_back(acc);
    }
    return BitMatrix(std::move(rows));
}

BitMatrix mat_transpose(const BitMatrix& m)
{
    int n = m.n();
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        BitVec r = BitVec::zero(n);
        for (int j = 1; j <= n; ++j)
            if (m.row(j - 1).get(i))
                r = r.with(j, 1);
        rows.push_back(r);
    }
    return BitMatrix(std::move(rows));
}

bool is_orthogonal(const BitMatrix& m)
{
    int n = m.n();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (inner_product(m.row(i), m.row(j)) != (i == j ? 1 : 0))
                return false;
    return true;
}

} // namespace nlbox
