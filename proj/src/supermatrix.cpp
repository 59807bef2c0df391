#include "supereinstein/supermatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace supereinstein {

SuperMatrix SuperMatrix::unit(int m, int n, int row, int col, Scalar v) {
    SuperMatrix out(m, n);
    out.set(row, col, std::move(v));
    return out;
}

SuperMatrix SuperMatrix::identity(int m, int n) {
    SuperMatrix out(m, n);
    for (int i = 0; i < m + n; ++i) out.set(i, i, Scalar(1));
    return out;
}

SuperMatrix SuperMatrix::diagonal(int m, int n, const std::vector<Scalar>& diag) {
    SuperMatrix out(m, n);
    for (int i = 0; i < static_cast<int>(diag.size()); ++i) out.set(i, i, diag[static_cast<std::size_t>(i)]);
    return out;
}

Scalar SuperMatrix::entry(int row, int col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<int, int>{row, col},
                               [](const Entry& e, const std::pair<int, int>& k) {
                                   return std::pair<int, int>{e.row, e.col} < k;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return Scalar();
}

void SuperMatrix::set(int row, int col, Scalar v) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<int, int>{row, col},
                               [](const Entry& e, const std::pair<int, int>& k) {
                                   return std::pair<int, int>{e.row, e.col} < k;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) {
        if (v.is_zero()) {
            entries_.erase(it);
        } else {
            it->value = std::move(v);
        }
        return;
    }
    if (!v.is_zero()) entries_.insert(it, Entry{row, col, std::move(v)});
}

void SuperMatrix::add_to(int row, int col, const Scalar& v) {
    if (v.is_zero()) return;
    set(row, col, entry(row, col) + v);
}

Parity SuperMatrix::parity() const {
    bool has_even = false, has_odd = false;
    for (const auto& e : entries_) {
        (pos_even(e.row, e.col) ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return Parity::mixed;
    if (has_odd) return Parity::odd;
    return Parity::even;
}

SuperMatrix SuperMatrix::even_part() const {
    SuperMatrix out(m_, n_);
    for (const auto& e : entries_)
        if (pos_even(e.row, e.col)) out.entries_.push_back(e);
    return out;
}

SuperMatrix SuperMatrix::odd_part() const {
    SuperMatrix out(m_, n_);
    for (const auto& e : entries_)
        if (!pos_even(e.row, e.col)) out.entries_.push_back(e);
    return out;
}

void SuperMatrix::check_same_shape(const SuperMatrix& o, const char* op) const {
    if (m_ != o.m_ || n_ != o.n_)
        throw DimensionMismatch(std::string(op) + ": shapes (" + std::to_string(m_) + "|" + std::to_string(n_) +
                                ") vs (" + std::to_string(o.m_) + "|" + std::to_string(o.n_) + ")");
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix out(m_, n_);
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) out.entries_.push_back(Entry{e.row, e.col, -e.value});
    return out;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    a.check_same_shape(b, "add");
    SuperMatrix out(a.m_, a.n_);
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() ||
            (ia != a.entries_.end() &&
             std::pair<int, int>{ia->row, ia->col} < std::pair<int, int>{ib->row, ib->col})) {
            out.entries_.push_back(*ia++);
        } else if (ia == a.entries_.end() ||
                   std::pair<int, int>{ib->row, ib->col} < std::pair<int, int>{ia->row, ia->col}) {
            out.entries_.push_back(*ib++);
        } else {
            Scalar s = ia->value + ib->value;
            if (!s.is_zero()) out.entries_.push_back(SuperMatrix::Entry{ia->row, ia->col, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) { return a + (-b); }

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    a.check_same_shape(b, "mul");
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& ea : a.entries_) {
        for (const auto& eb : b.entries_) {
            if (ea.col != eb.row) continue;
            acc[{ea.row, eb.col}] += ea.value * eb.value;
        }
    }
    SuperMatrix out(a.m_, a.n_);
    for (auto& [pos, v] : acc) {
        if (!v.is_zero()) out.entries_.push_back(SuperMatrix::Entry{pos.first, pos.second, std::move(v)});
    }
    return out;
}

SuperMatrix operator*(const Scalar& s, const SuperMatrix& a) {
    SuperMatrix out(a.m_, a.n_);
    if (s.is_zero()) return out;
    out.entries_.reserve(a.entries_.size());
    for (const auto& e : a.entries_) {
        Scalar v = s * e.value;
        if (!v.is_zero()) out.entries_.push_back(SuperMatrix::Entry{e.row, e.col, std::move(v)});
    }
    return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.m_ != b.m_ || a.n_ != b.n_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        const auto& ea = a.entries_[i];
        const auto& eb = b.entries_[i];
        if (ea.row != eb.row || ea.col != eb.col || ea.value != eb.value) return false;
    }
    return true;
}

Scalar SuperMatrix::supertrace() const {
    Scalar out;
    for (const auto& e : entries_) {
        if (e.row != e.col) continue;
        out += e.row < m_ ? e.value : -e.value;
    }
    return out;
}

Scalar SuperMatrix::trace_even_block() const {
    Scalar out;
    for (const auto& e : entries_) {
        if (e.row == e.col && e.row < m_) out += e.value;
    }
    return out;
}

SuperMatrix SuperMatrix::dagger() const {
    SuperMatrix out(m_, n_);
    for (const auto& e : entries_) out.set(e.col, e.row, e.value.conjugate());
    return out;
}

std::string SuperMatrix::to_string() const {
    std::ostringstream os;
    os << "(" << m_ << "|" << n_ << "){";
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << ", ";
        first = false;
        os << "[" << e.row << "," << e.col << "]=" << e.value.to_string();
    }
    os << "}";
    return os.str();
}

int bracket_sign(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

SuperMatrix graded_bracket(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.block_m() != y.block_m() || x.block_n() != y.block_n())
        throw DimensionMismatch("graded_bracket: incompatible shapes");
    auto homogeneous = [](const SuperMatrix& a, const SuperMatrix& b, Parity pa, Parity pb) {
        SuperMatrix ab = a * b;
        SuperMatrix ba = b * a;
        return bracket_sign(pa, pb) < 0 ? ab + ba : ab - ba;
    };
    Parity px = x.parity(), py = y.parity();
    if (px != Parity::mixed && py != Parity::mixed) return homogeneous(x, y, px, py);
    SuperMatrix out(x.block_m(), x.block_n());
    const SuperMatrix xs[2] = {x.even_part(), x.odd_part()};
    const SuperMatrix ys[2] = {y.even_part(), y.odd_part()};
    for (int i = 0; i < 2; ++i) {
        if (xs[i].is_zero()) continue;
        for (int j = 0; j < 2; ++j) {
            if (ys[j].is_zero()) continue;
            out += homogeneous(xs[i], ys[j], i ? Parity::odd : Parity::even, j ? Parity::odd : Parity::even);
        }
    }
    return out;
}

}  // namespace supereinstein
