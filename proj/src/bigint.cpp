#include "permaspin/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permaspin {

namespace {
constexpr double kLimbBase = 4294967296.0;  // 2^32
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    unsigned long long mag =
        value > 0 ? static_cast<unsigned long long>(value)
                  : ~static_cast<unsigned long long>(value) + 1ULL;  // safe for LLONG_MIN
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (s < 0) {
            s += static_cast<std::int64_t>(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_mag(rhs.limbs_, limbs_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        sign_ = 0;
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = limbs_[i];
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t s = out[i + j] + carry + ai * rhs.limbs_[j];
            out[i + j] = static_cast<std::uint32_t>(s & 0xffffffffULL);
            carry = s >> 32;
        }
        size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t s = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(s & 0xffffffffULL);
            carry = s >> 32;
            ++k;
        }
    }
    limbs_ = std::move(out);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(limbs_, rhs.limbs_) * (sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

BigInt& BigInt::div_exact(std::uint32_t divisor) {
    if (divisor == 0) throw std::invalid_argument("BigInt::div_exact: zero divisor");
    if (sign_ == 0) return *this;
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0) throw std::invalid_argument("BigInt::div_exact: inexact division");
    trim();
    return *this;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::vector<std::uint32_t> groups;  // base 10^9
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        groups.push_back(static_cast<std::uint32_t>(rem));
        while (!work.empty() && work.back() == 0) work.pop_back();
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(groups.back());
    for (size_t i = groups.size() - 1; i-- > 0;) {
        std::string g = std::to_string(groups[i]);
        out += std::string(9 - g.size(), '0') + g;
    }
    return out;
}

double BigInt::to_double() const {
    double v = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kLimbBase + limbs_[i];
    return sign_ < 0 ? -v : v;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (int i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result.div_exact(static_cast<std::uint32_t>(i + 1));
    }
    return result;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
    BigInt result(1);
    int rest = n;
    for (int p : parts) {
        if (p < 0 || p > rest) throw std::invalid_argument("multinomial: invalid parts");
        result *= binomial(rest, p);
        rest -= p;
    }
    if (rest != 0) throw std::invalid_argument("multinomial: parts do not sum to n");
    return result;
}

}  // namespace permaspin
