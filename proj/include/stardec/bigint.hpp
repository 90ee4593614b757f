#ifndef STARDEC_BIGINT_HPP
#define STARDEC_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "stardec/errors.hpp"

namespace stardec {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Supports exactly what the counting oracles need: ring arithmetic,
// comparison, exact division, and decimal formatting.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_string(const std::string& text);

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& other) const;
    BigInt operator-(const BigInt& other) const;
    BigInt operator*(const BigInt& other) const;

    // Quotient and remainder truncated toward zero.
    std::pair<BigInt, BigInt> divmod(const BigInt& divisor) const;

    // Division that must leave no remainder; throws Internal otherwise.
    BigInt div_exact(const BigInt& divisor) const;

    bool operator==(const BigInt& other) const { return sign_ == other.sign_ && mag_ == other.mag_; }
    std::strong_ordering operator<=>(const BigInt& other) const;

    std::string to_string() const;

    // Exact value when it fits in long long; throws Internal otherwise.
    long long to_long_long() const;

private:
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void trim(std::vector<std::uint32_t>& mag);

    int sign_ = 0;
    std::vector<std::uint32_t> mag_; // little-endian, no trailing zero limbs
};

// Catalan number C_m by the convolution recurrence.
BigInt catalan(int m);

// Number of maximal star decompositions of P_n^k: the k-by-k Hankel
// determinant det(C_{n-i-j}), evaluated by fraction-free elimination.
// Throws InvalidParameters unless 1 <= k and 2k+1 <= n.
BigInt jonsson_count(int n, int k);

} // namespace stardec

#endif
