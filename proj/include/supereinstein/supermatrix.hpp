#ifndef SUPEREINSTEIN_SUPERMATRIX_HPP
#define SUPEREINSTEIN_SUPERMATRIX_HPP

#include <string>
#include <vector>

#include "supereinstein/scalar.hpp"

namespace supereinstein {

struct DimensionMismatch : ArithmeticError {
    explicit DimensionMismatch(const std::string& what) : ArithmeticError(what) {}
};

enum class Parity { even, odd, mixed };

inline const char* to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "mixed";
    }
}

/// Square (m|n)-graded matrix over Scalar, stored sparsely.
/// Rows/columns 0..m-1 are even, m..m+n-1 odd. An entry at (r,c) is even when
/// r and c lie on the same side of the split, odd otherwise.
class SuperMatrix {
public:
    struct Entry {
        int row, col;
        Scalar value;
    };

    SuperMatrix() = default;
    SuperMatrix(int m, int n) : m_(m), n_(n) {}

    static SuperMatrix unit(int m, int n, int row, int col, Scalar v = Scalar(1));
    static SuperMatrix identity(int m, int n);
    static SuperMatrix diagonal(int m, int n, const std::vector<Scalar>& diag);

    int block_m() const { return m_; }
    int block_n() const { return n_; }
    int size() const { return m_ + n_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Scalar entry(int row, int col) const;
    void set(int row, int col, Scalar v);
    void add_to(int row, int col, const Scalar& v);

    /// Parity of the nonzero support; even for the zero matrix.
    Parity parity() const;
    bool is_homogeneous() const { return parity() != Parity::mixed; }

    SuperMatrix even_part() const;
    SuperMatrix odd_part() const;

    SuperMatrix operator-() const;
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const Scalar& s, const SuperMatrix& a);
    SuperMatrix& operator+=(const SuperMatrix& o) { *this = *this + o; return *this; }
    SuperMatrix& operator-=(const SuperMatrix& o) { *this = *this - o; return *this; }

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

    /// Trace over the even block minus trace over the odd block.
    Scalar supertrace() const;
    Scalar trace_even_block() const;

    /// Conjugate transpose: (c E_{rc})^dagger = conj(c) E_{cr}.
    SuperMatrix dagger() const;

    std::string to_string() const;

private:
    int m_ = 0, n_ = 0;
    std::vector<Entry> entries_;  // sorted by (row, col), no zero values

    bool pos_even(int r, int c) const { return (r < m_) == (c < m_); }
    void check_same_shape(const SuperMatrix& o, const char* op) const;
};

/// Graded commutator XY - (-1)^{[X][Y]} YX. Mixed-parity inputs are split into
/// homogeneous parts and recombined linearly.
SuperMatrix graded_bracket(const SuperMatrix& x, const SuperMatrix& y);

/// -1 to the product of parities of two homogeneous matrices (+1 unless both odd).
int bracket_sign(Parity a, Parity b);

}  // namespace supereinstein

#endif
