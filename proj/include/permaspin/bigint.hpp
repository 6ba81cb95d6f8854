#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace permaspin {

// Signed arbitrary-precision integer (base 2^32 magnitude limbs).
// Covers what the combinatorics needs: ring arithmetic, comparison,
// decimal output, exact binomials. No general division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    // Exact division by a small positive divisor; requires zero remainder.
    BigInt& div_exact(std::uint32_t divisor);

    std::string to_string() const;
    double to_double() const;

private:
    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

// Exact multinomial n! / (parts_0! * parts_1! * ...); parts must sum to n.
BigInt multinomial(int n, const std::vector<int>& parts);

}  // namespace permaspin
