// Exact integer and rational arithmetic.
//
// Arbitrary-precision signed integers (sign + base-2^32 magnitude) and
// reduced fractions on top of them.  Everything downstream of this file
// assumes arithmetic never overflows and never rounds.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohint {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - (unsigned long long)v : (unsigned long long)v;
        while (m) {
            mag_.push_back((uint32_t)(m & 0xffffffffu));
            m >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sg = -1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r.add_small((uint32_t)(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sg;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            __int128 s = a.signed_i128() + b.signed_i128();
            return from_i128(s);
        }
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            unsigned __int128 p = (unsigned __int128)a.to_ull() * b.to_ull();
            BigInt r = from_u128(p);
            r.sign_ = a.sign_ * b.sign_;
            if (r.mag_.empty()) r.sign_ = 0;
            return r;
        }
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }
    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated quotient and remainder; remainder has the sign of *this.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            unsigned long long am = a.to_ull(), bm = b.to_ull();
            q = from_u128(am / bm);
            r = from_u128(am % bm);
            if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
            if (!r.mag_.empty()) r.sign_ = a.sign_;
            return;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        r = BigInt();
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.trim();
        r.trim();
        if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.mag_.empty()) r.sign_ = a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b) {
        // binary gcd on magnitudes
        if (a.sign_ == 0) return b.abs();
        if (b.sign_ == 0) return a.abs();
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            unsigned long long x = a.to_ull(), y = b.to_ull();
            while (y) {
                unsigned long long t = x % y;
                x = y;
                y = t;
            }
            return from_u128(x);
        }
        a.sign_ = 1;
        b.sign_ = 1;
        int shift = 0;
        while (a.even() && b.even()) {
            a.shr1();
            b.shr1();
            ++shift;
        }
        while (a.even()) a.shr1();
        while (!b.is_zero()) {
            while (b.even()) b.shr1();
            if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a.mag_, b.mag_);
            b.mag_ = sub_mag(b.mag_, a.mag_);
            b.trim();
            if (b.mag_.empty()) b.sign_ = 0;
        }
        for (int i = 0; i < shift; ++i) a.shl1();
        return a;
    }

    BigInt pow(unsigned e) const {
        BigInt r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    bool fits_longlong() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = to_ull();
        if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
        return v <= 0x8000000000000000ULL;
    }
    long long to_longlong() const {
        if (!fits_longlong()) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long v = to_ull();
        return sign_ < 0 ? -(long long)v : (long long)v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> chunks;  // base 10^9, little endian
        BigInt t = abs();
        BigInt base(1000000000LL);
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, base, q, r);
            chunks.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
            t = q;
        }
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(chunks.back());
        for (size_t i = chunks.size() - 1; i-- > 0;) {
            std::string c = std::to_string(chunks[i]);
            s += std::string(9 - c.size(), '0') + c;
        }
        return s;
    }

    size_t bit_length() const {
        if (mag_.empty()) return 0;
        uint32_t top = mag_.back();
        size_t b = (mag_.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }

  private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }
    bool even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }
    void shr1() {
        uint32_t carry = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            uint32_t nc = mag_[i] & 1u;
            mag_[i] = (mag_[i] >> 1) | (carry << 31);
            carry = nc;
        }
        trim();
    }
    void shl1() {
        uint32_t carry = 0;
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint32_t nc = mag_[i] >> 31;
            mag_[i] = (mag_[i] << 1) | carry;
            carry = nc;
        }
        if (carry) mag_.push_back(carry);
    }
    void mul_small(uint32_t m) {
        uint64_t carry = 0;
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t cur = (uint64_t)mag_[i] * m + carry;
            mag_[i] = (uint32_t)cur;
            carry = cur >> 32;
        }
        while (carry) {
            mag_.push_back((uint32_t)carry);
            carry >>= 32;
        }
        trim();
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
    }
    void add_small(uint32_t a) {
        if (a == 0) return;
        if (sign_ == 0) {
            mag_.assign(1, a);
            sign_ = 1;
            return;
        }
        uint64_t carry = a;
        for (size_t i = 0; i < mag_.size() && carry; ++i) {
            uint64_t cur = (uint64_t)mag_[i] + carry;
            mag_[i] = (uint32_t)cur;
            carry = cur >> 32;
        }
        if (carry) mag_.push_back((uint32_t)carry);
    }
    unsigned long long to_ull() const {
        unsigned long long v = 0;
        if (mag_.size() > 0) v = mag_[0];
        if (mag_.size() > 1) v |= (unsigned long long)mag_[1] << 32;
        return v;
    }
    __int128 signed_i128() const {
        __int128 v = (__int128)to_ull();
        return sign_ < 0 ? -v : v;
    }
    static BigInt from_u128(unsigned __int128 v) {
        BigInt r;
        while (v) {
            r.mag_.push_back((uint32_t)(v & 0xffffffffu));
            v >>= 32;
        }
        if (!r.mag_.empty()) r.sign_ = 1;
        return r;
    }
    static BigInt from_i128(__int128 v) {
        bool neg = v < 0;
        BigInt r = from_u128(neg ? (unsigned __int128)(-v) : (unsigned __int128)v);
        if (neg && !r.mag_.empty()) r.sign_ = -1;
        return r;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& sml = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size());
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < sml.size() ? sml[i] : 0);
            r[i] = (uint32_t)cur;
            carry = cur >> 32;
        }
        if (carry) r.push_back((uint32_t)carry);
        return r;
    }
    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = (int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += (int64_t)1 << 32;
                borrow = 1;
            } else
                borrow = 0;
            r[i] = (uint32_t)cur;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = (uint64_t)a[i] * b[j] + r[i + j] + carry;
                r[i + j] = (uint32_t)cur;
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = (uint64_t)r[k] + carry;
                r[k] = (uint32_t)cur;
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // binary long division on magnitudes, a >= b > 0
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        size_t abits = bits_of(a);
        q.assign(a.size(), 0);
        r.clear();
        // process bits of a from most significant down
        for (size_t i = abits; i-- > 0;) {
            // r = 2r + bit_i(a)
            shl1_mag(r);
            if ((a[i / 32] >> (i % 32)) & 1u) {
                if (r.empty())
                    r.push_back(1);
                else
                    r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[i / 32] |= (1u << (i % 32));
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
    static size_t bits_of(const std::vector<uint32_t>& m) {
        if (m.empty()) return 0;
        uint32_t top = m.back();
        size_t b = (m.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }
    static void shl1_mag(std::vector<uint32_t>& m) {
        uint32_t carry = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            uint32_t nc = m[i] >> 31;
            m[i] = (m[i] << 1) | carry;
            carry = nc;
        }
        if (carry) m.push_back(carry);
    }
};

// Reduced fraction; denominator always positive.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rat(BigInt n, BigInt d = BigInt(1)) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt::from_string(s));
        return Rat(BigInt::from_string(s.substr(0, slash)),
                   BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(den_, num_);
    }
    Rat pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Rat r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    long long to_longlong_exact() const {
        if (!is_integer()) throw std::domain_error("Rat: not an integer");
        return num_.to_longlong();
    }

  private:
    BigInt num_, den_;
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace cohint
