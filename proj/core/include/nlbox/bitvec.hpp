#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlbox/errors.hpp"

namespace nlbox {

using Word = std::uint64_t;

// A GF(2) vector of fixed length n (1 <= n <= 64) packed into one machine word.
// Bit position k (1-based) is the k-th character of the textual form, so
// "100000" has exactly position 1 set. Position k lives at word bit (n - k),
// which makes the packed word compare in the same order as the text.
class BitVec {
public:
    BitVec() : n_(0), bits_(0) {}
    BitVec(int n, Word bits);

    static BitVec zero(int n) { return BitVec(n, 0); }
    static BitVec ones(int n);
    // Parses a bitstring such as "011010"; rejects other characters.
    static BitVec parse(const std::string& text);

    int n() const { return n_; }
    Word word() const { return bits_; }
    std::string str() const;

    int get(int pos) const; // 1-based position, returns 0 or 1
    BitVec with(int pos, int value) const;

    friend bool operator==(BitVec a, BitVec b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }
    friend bool operator!=(BitVec a, BitVec b) { return !(a == b); }
    // Lexicographic on the textual form; shorter vectors first across lengths.
    friend bool operator<(BitVec a, BitVec b)
    {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
    }

    friend BitVec operator^(BitVec a, BitVec b);

private:
    int n_;
    Word bits_;
};

// Mod-2 dot product a.b; operands must share a length.
int inner_product(BitVec a, BitVec b);

// Componentwise XOR, the group operation on inputs and translations.
BitVec xor_sum(BitVec a, BitVec b);

// XOR of a non-empty list of equal-length vectors.
BitVec xor_sum(const std::vector<BitVec>& vs);

// Number of ones mod 2.
int parity(BitVec v);

// The reverse (componentwise complement) of v: every 0 and 1 swapped.
BitVec reverse(BitVec v);

// A square GF(2) matrix held as n row vectors of length n.
class BitMatrix {
public:
    BitMatrix() : n_(0) {}
    explicit BitMatrix(std::vector<BitVec> rows);

    static BitMatrix identity(int n);
    // Parses n whitespace-separated bitstring lines.
    static BitMatrix parse(const std::string& text);

    int n() const { return n_; }
    const BitVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<BitVec>& rows() const { return rows_; }
    std::string str() const; // n lines, one bitstring per row

    friend bool operator==(const BitMatrix& a, const BitMatrix& b)
    {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }
    // Row-tuple order; used wherever a canonical matrix order is needed.
    friend bool operator<(const BitMatrix& a, const BitMatrix& b)
    {
        return a.rows_ < b.rows_;
    }

private:
    int n_;
    std::vector<BitVec> rows_;
};

// Matrix-vector product over GF(2): component i is row_i . x.
BitVec mat_apply(const BitMatrix& m, BitVec x);

// Matrix product a*b over GF(2).
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

BitMatrix mat_transpose(const BitMatrix& m);

// True iff r_i . r_j = delta_ij for all row pairs. Over GF(2) this is
// equivalent to R^t R = I, and it forces every row and column to have odd
// parity (each row dots to 1 with itself).
bool is_orthogonal(const BitMatrix& m);

} // namespace nlbox
