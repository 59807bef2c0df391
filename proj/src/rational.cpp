#include "supereinstein/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

namespace supereinstein {

namespace {
long long ll_gcd(long long a, long long b) {
    // Magnitudes only; callers pass non-negative values that fit in int64.
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

BigInt::BigInt(std::string_view decimal) {
    bool neg = false;
    std::size_t i = 0;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) throw ArithmeticError("empty integer literal");
    BigInt acc = 0;
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ArithmeticError("bad integer literal: " + std::string(decimal));
        acc = acc * BigInt(10) + BigInt(c - '0');
    }
    *this = neg ? -acc : acc;
}

int BigInt::signum() const {
    if (limbs_.empty()) return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
    return sign_;
}

long long BigInt::to_int64() const {
    if (!limbs_.empty()) throw ArithmeticError("BigInt out of int64 range");
    return small_;
}

BigInt BigInt::operator-() const {
    if (limbs_.empty()) {
        if (small_ != std::numeric_limits<long long>::min()) {
            BigInt r;
            r.small_ = -small_;
            return r;
        }
        return from_i128(-static_cast<__int128>(small_));
    }
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const { return is_negative() ? -*this : *this; }

BigInt BigInt::from_i128(__int128 v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        BigInt r;
        r.small_ = static_cast<long long>(v);
        return r;
    }
    BigInt r;
    r.sign_ = v < 0 ? -1 : 1;
    unsigned __int128 mag = v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    r.limbs_ = limbs_of(mag);
    r.small_ = 0;
    return r;
}

std::vector<std::uint32_t> BigInt::limbs_of(unsigned __int128 mag) {
    std::vector<std::uint32_t> out;
    while (mag != 0) {
        out.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
    return out;
}

void BigInt::promote() {
    if (!limbs_.empty()) return;
    sign_ = small_ < 0 ? -1 : 1;
    unsigned __int128 mag = small_ < 0 ? -static_cast<unsigned __int128>(static_cast<__int128>(small_))
                                       : static_cast<unsigned __int128>(small_);
    limbs_ = limbs_of(mag);
    small_ = 0;
    if (limbs_.empty()) sign_ = 1;  // zero stays small
}

void BigInt::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) {
        small_ = 0;
        sign_ = 1;
        return;
    }
    if (limbs_.size() <= 2) {
        unsigned __int128 mag = limbs_[0];
        if (limbs_.size() == 2) mag |= static_cast<unsigned __int128>(limbs_[1]) << 32;
        __int128 v = sign_ < 0 ? -static_cast<__int128>(mag) : static_cast<__int128>(mag);
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
            small_ = static_cast<long long>(v);
            limbs_.clear();
            sign_ = 1;
        }
    }
}

const std::vector<std::uint32_t>& BigInt::mag_ref(std::vector<std::uint32_t>& scratch) const {
    if (!limbs_.empty()) return limbs_;
    unsigned __int128 mag = small_ < 0 ? -static_cast<unsigned __int128>(static_cast<__int128>(small_))
                                       : static_cast<unsigned __int128>(small_);
    scratch = limbs_of(mag);
    return scratch;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            // (2^32-1)^2 + 2*(2^32-1) < 2^64, so the sum never overflows
            std::uint64_t p = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(p & 0xffffffffu);
            carry = p >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw DivisionByZero();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / b[0]);
            rem = cur % b[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    // Normalize so the top limb of the divisor has its high bit set.
    int shift = 0;
    for (std::uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
    auto shl = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] |= shift == 0 ? v[i] : (v[i] << shift);
            if (shift != 0) out[i + 1] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - shift));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<std::uint32_t> u = shl(a), v = shl(b);
    const std::size_t nlen = v.size(), mlen = u.size() - nlen;
    u.resize(u.size() + 1, 0);
    q.assign(mlen + 1, 0);
    const std::uint64_t vtop = v[nlen - 1], vsec = v[nlen - 2];
    for (std::size_t j = mlen + 1; j-- > 0;) {
        unsigned __int128 num =
            (static_cast<unsigned __int128>(u[j + nlen]) << 32) | u[j + nlen - 1];
        std::uint64_t qhat = static_cast<std::uint64_t>(num / vtop);
        std::uint64_t rhat = static_cast<std::uint64_t>(num % vtop);
        while (qhat >= 0x100000000ull ||
               static_cast<unsigned __int128>(qhat) * vsec >
                   ((static_cast<unsigned __int128>(rhat) << 32) | u[j + nlen - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= 0x100000000ull) break;
        }
        // Multiply-subtract qhat*v from u[j..j+nlen].
        __int128 borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < nlen; ++i) {
            unsigned __int128 p = static_cast<unsigned __int128>(qhat) * v[i] + carry;
            carry = static_cast<std::uint64_t>(p >> 32);
            __int128 sub = static_cast<__int128>(u[i + j]) - static_cast<std::uint32_t>(p & 0xffffffffu) + borrow;
            if (sub < 0) {
                u[i + j] = static_cast<std::uint32_t>(sub + (static_cast<__int128>(1) << 32));
                borrow = -1;
            } else {
                u[i + j] = static_cast<std::uint32_t>(sub);
                borrow = 0;
            }
        }
        __int128 subtop = static_cast<__int128>(u[j + nlen]) - static_cast<__int128>(carry) + borrow;
        if (subtop < 0) {
            // qhat was one too large: add v back.
            u[j + nlen] = static_cast<std::uint32_t>(subtop + (static_cast<__int128>(1) << 32));
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < nlen; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            u[j + nlen] = static_cast<std::uint32_t>(u[j + nlen] + c2);
        } else {
            u[j + nlen] = static_cast<std::uint32_t>(subtop);
        }
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // Denormalize the remainder.
    u.resize(nlen);
    std::vector<std::uint32_t> rem(nlen, 0);
    for (std::size_t i = 0; i < nlen; ++i) {
        std::uint32_t lo = shift == 0 ? u[i] : (u[i] >> shift);
        if (shift != 0 && i + 1 < nlen)
            lo |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i + 1]) << (32 - shift));
        rem[i] = lo;
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    r = std::move(rem);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty())
        return BigInt::from_i128(a.as_i128_if_small() + b.as_i128_if_small());
    std::vector<std::uint32_t> sa, sb;
    const auto& ma = a.mag_ref(sa);
    const auto& mb = b.mag_ref(sb);
    int signa = a.signum(), signb = b.signum();
    if (signa == 0) return b;
    if (signb == 0) return a;
    BigInt r;
    if (signa == signb) {
        r.limbs_ = BigInt::add_mag(ma, mb);
        r.sign_ = signa;
    } else {
        int c = BigInt::cmp_mag(ma, mb);
        if (c == 0) return BigInt(0);
        r.limbs_ = c > 0 ? BigInt::sub_mag(ma, mb) : BigInt::sub_mag(mb, ma);
        r.sign_ = c > 0 ? signa : signb;
    }
    r.normalize();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty()) {
        // int64 * int64 always fits in int128
        return BigInt::from_i128(a.as_i128_if_small() * b.as_i128_if_small());
    }
    std::vector<std::uint32_t> sa, sb;
    const auto& ma = a.mag_ref(sa);
    const auto& mb = b.mag_ref(sb);
    BigInt r;
    r.limbs_ = BigInt::mul_mag(ma, mb);
    r.sign_ = a.signum() * b.signum();
    if (r.sign_ == 0) return BigInt(0);
    r.normalize();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.limbs_.empty() && b.limbs_.empty()) {
        __int128 qa = a.as_i128_if_small() / b.as_i128_if_small();
        __int128 ra = a.as_i128_if_small() % b.as_i128_if_small();
        q = from_i128(qa);
        r = from_i128(ra);
        return;
    }
    std::vector<std::uint32_t> sa, sb, qm, rm;
    const auto& ma = a.mag_ref(sa);
    const auto& mb = b.mag_ref(sb);
    divmod_mag(ma, mb, qm, rm);
    BigInt qq, rr;
    qq.limbs_ = std::move(qm);
    qq.sign_ = a.signum() * b.signum();
    rr.limbs_ = std::move(rm);
    rr.sign_ = a.signum();
    qq.normalize();
    rr.normalize();
    q = std::move(qq);
    r = std::move(rr);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty()) {
        long long x = a.small_ < 0 ? -a.small_ : a.small_;
        long long y = b.small_ < 0 ? -b.small_ : b.small_;
        if (a.small_ == std::numeric_limits<long long>::min() ||
            b.small_ == std::numeric_limits<long long>::min()) {
            // fall through to the generic path for the single non-negatable value
        } else {
            return BigInt(ll_gcd(x, y));
        }
    }
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt acc = 1, b = base;
    while (exp != 0) {
        if (exp & 1u) acc = acc * b;
        b = b * b;
        exp >>= 1;
    }
    return acc;
}

int BigInt::compare(const BigInt& o) const {
    if (limbs_.empty() && o.limbs_.empty())
        return small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
    int sa = signum(), sb = o.signum();
    if (sa != sb) return sa < sb ? -1 : 1;
    std::vector<std::uint32_t> s1, s2;
    int c = cmp_mag(mag_ref(s1), o.mag_ref(s2));
    return sa >= 0 ? c : -c;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return std::to_string(small_);
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    const std::vector<std::uint32_t> ten9 = {1000000000u};
    std::vector<std::uint32_t> q, r;
    while (!mag.empty()) {
        divmod_mag(mag, ten9, q, r);
        std::uint32_t chunk = r.empty() ? 0u : r[0];
        std::string part = std::to_string(chunk);
        if (!q.empty()) part = std::string(9 - part.size(), '0') + part;
        out = part + out;
        mag = q;
    }
    if (out.empty()) out = "0";
    return (sign_ < 0 ? "-" : "") + out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace supereinstein
