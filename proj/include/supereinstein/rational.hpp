#ifndef SUPEREINSTEIN_RATIONAL_HPP
#define SUPEREINSTEIN_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <stdexcept>
#include <iosfwd>

namespace supereinstein {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : ArithmeticError {
    DivisionByZero() : ArithmeticError("division by zero") {}
};

/// Signed arbitrary-precision integer. Values that fit in an int64 are kept
/// inline; larger magnitudes spill into base-2^32 limbs (little-endian).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design
    explicit BigInt(std::string_view decimal);

    bool is_zero() const { return limbs_.empty() ? small_ == 0 : false; }
    bool is_one() const { return limbs_.empty() && small_ == 1; }
    bool is_negative() const { return limbs_.empty() ? small_ < 0 : sign_ < 0; }
    int signum() const;

    /// True when the value fits in an int64 (always true in small mode).
    bool fits_int64() const { return limbs_.empty(); }
    long long to_int64() const;  // throws when out of range

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (C semantics: quotient rounds toward zero).
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
    static BigInt pow(const BigInt& base, unsigned exp);

    /// -1, 0, +1 as *this compares to o.
    int compare(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // Small mode: limbs_ empty, value in small_. Heap mode: sign_ in {-1,+1},
    // limbs_ non-empty with no leading zero limb, magnitude always > INT64_MAX range
    // is not required (we normalize back to small when possible).
    long long small_ = 0;
    int sign_ = 1;
    std::vector<std::uint32_t> limbs_;

    static BigInt from_i128(__int128 v);
    __int128 as_i128_if_small() const { return static_cast<__int128>(small_); }
    void promote();                    // small -> limbs
    void normalize();                  // strip zeros, demote when it fits
    static std::vector<std::uint32_t> limbs_of(unsigned __int128 mag);
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    const std::vector<std::uint32_t>& mag_ref(std::vector<std::uint32_t>& scratch) const;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    Rational inverse() const;
    Rational abs() const { return is_negative() ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    int compare(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.compare(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace supereinstein

#endif
