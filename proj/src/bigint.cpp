#include "stardec/bigint.hpp"

#include <algorithm>

namespace stardec {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0)
        return;
    sign_ = value > 0 ? 1 : -1;
    unsigned long long mag = value > 0 ? static_cast<unsigned long long>(value)
                                       : 0ull - static_cast<unsigned long long>(value);
    while (mag) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& text) {
    BigInt result;
    size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    if (i == text.size())
        throw Error(ErrorKind::SyntaxError, "empty integer literal");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw Error(ErrorKind::SyntaxError, "bad digit in integer literal");
        result = result * BigInt(10) + BigInt(text[i] - '0');
    }
    if (!result.is_zero())
        result.sign_ = sign;
    return result;
}

void BigInt::trim(std::vector<std::uint32_t>& mag) {
    while (!mag.empty() && mag.back() == 0)
        mag.pop_back();
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size())
            sum += a[i];
        if (i < b.size())
            sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffull));
        carry = sum >> 32;
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    // Requires |a| >= |b|.
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    trim(out);
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator+(const BigInt& other) const {
    if (is_zero())
        return other;
    if (other.is_zero())
        return *this;
    BigInt out;
    if (sign_ == other.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, other.mag_);
        return out;
    }
    int cmp = cmp_mag(mag_, other.mag_);
    if (cmp == 0)
        return BigInt();
    if (cmp > 0) {
        out.sign_ = sign_;
        out.mag_ = sub_mag(mag_, other.mag_);
    } else {
        out.sign_ = other.sign_;
        out.mag_ = sub_mag(other.mag_, mag_);
    }
    return out;
}

BigInt BigInt::operator-(const BigInt& other) const { return *this + (-other); }

BigInt BigInt::operator*(const BigInt& other) const {
    if (is_zero() || other.is_zero())
        return BigInt();
    BigInt out;
    out.sign_ = sign_ * other.sign_;
    out.mag_.assign(mag_.size() + other.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < other.mag_.size() || carry; ++j) {
            std::uint64_t cur = out.mag_[i + j] + carry;
            if (j < other.mag_.size())
                cur += static_cast<std::uint64_t>(mag_[i]) * other.mag_[j];
            out.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
    }
    trim(out.mag_);
    return out;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& divisor) const {
    if (divisor.is_zero())
        throw Error(ErrorKind::Internal, "division by zero");
    if (cmp_mag(mag_, divisor.mag_) < 0)
        return {BigInt(), *this};

    // Shift-subtract long division over bits; magnitudes here stay small.
    const size_t bits = mag_.size() * 32;
    std::vector<std::uint32_t> q(mag_.size(), 0);
    std::vector<std::uint32_t> r;
    for (size_t bit = bits; bit-- > 0;) {
        // r = (r << 1) | bit
        std::uint32_t carry = (mag_[bit / 32] >> (bit % 32)) & 1u;
        for (size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry)
            r.push_back(carry);
        if (cmp_mag(r, divisor.mag_) >= 0) {
            r = sub_mag(r, divisor.mag_);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }

    BigInt quotient, remainder;
    trim(q);
    quotient.mag_ = std::move(q);
    if (!quotient.mag_.empty())
        quotient.sign_ = sign_ * divisor.sign_;
    trim(r);
    remainder.mag_ = std::move(r);
    if (!remainder.mag_.empty())
        remainder.sign_ = sign_;
    return {quotient, remainder};
}

BigInt BigInt::div_exact(const BigInt& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw Error(ErrorKind::Internal, "expected exact division");
    return q;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (sign_ != other.sign_)
        return sign_ <=> other.sign_;
    int cmp = cmp_mag(mag_, other.mag_);
    if (sign_ < 0)
        cmp = -cmp;
    return cmp <=> 0;
}

std::string BigInt::to_string() const {
    if (is_zero())
        return "0";
    std::vector<std::uint32_t> chunks; // base 1e9
    BigInt rest = *this;
    rest.sign_ = 1;
    const BigInt billion(1000000000);
    while (!rest.is_zero()) {
        auto [q, r] = rest.divmod(billion);
        chunks.push_back(r.is_zero() ? 0u : r.mag_[0]);
        rest = std::move(q);
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

long long BigInt::to_long_long() const {
    unsigned long long value = 0;
    if (mag_.size() > 2)
        throw Error(ErrorKind::Internal, "value does not fit in long long");
    for (size_t i = mag_.size(); i-- > 0;)
        value = (value << 32) | mag_[i];
    if (sign_ >= 0) {
        if (value > 0x7fffffffffffffffull)
            throw Error(ErrorKind::Internal, "value does not fit in long long");
        return static_cast<long long>(value);
    }
    if (value > 0x8000000000000000ull)
        throw Error(ErrorKind::Internal, "value does not fit in long long");
    return -static_cast<long long>(value - 1) - 1;
}

BigInt catalan(int m) {
    if (m < 0)
        throw Error(ErrorKind::InvalidParameters, "catalan index must be nonnegative");
    std::vector<BigInt> c(static_cast<size_t>(m) + 1);
    c[0] = BigInt(1);
    for (int i = 1; i <= m; ++i) {
        BigInt sum;
        for (int j = 0; j < i; ++j)
            sum = sum + c[static_cast<size_t>(j)] * c[static_cast<size_t>(i - 1 - j)];
        c[static_cast<size_t>(i)] = sum;
    }
    return c[static_cast<size_t>(m)];
}

BigInt jonsson_count(int n, int k) {
    if (k < 1 || 2 * k + 1 > n)
        throw Error(ErrorKind::InvalidParameters,
                    "jonsson count needs 1 <= k and 2k+1 <= n, got n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
    std::vector<std::vector<BigInt>> m(static_cast<size_t>(k), std::vector<BigInt>(static_cast<size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = catalan(n - i - j);

    // Bareiss fraction-free elimination; divisions are exact.
    BigInt prev(1);
    int sign = 1;
    for (int col = 0; col < k - 1; ++col) {
        if (m[static_cast<size_t>(col)][static_cast<size_t>(col)].is_zero()) {
            int swap_row = -1;
            for (int r = col + 1; r < k; ++r)
                if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero())
                    swap_row = r;
            if (swap_row < 0)
                return BigInt(0);
            std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c < k; ++c) {
                BigInt numerator = m[static_cast<size_t>(col)][static_cast<size_t>(col)] *
                                       m[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                                   m[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                                       m[static_cast<size_t>(col)][static_cast<size_t>(c)];
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] = numerator.div_exact(prev);
            }
            m[static_cast<size_t>(r)][static_cast<size_t>(col)] = BigInt(0);
        }
        prev = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    }
    BigInt det = m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
    return sign > 0 ? det : -det;
}

} // namespace stardec
