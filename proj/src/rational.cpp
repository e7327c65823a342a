#include "coorth/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coorth {

Rat rat(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text) {
    // Accepted grammar: [-]digits or [-]digits/digits with positive
    // denominator.  Anything else (floats, whitespace, empty) is rejected.
    const auto bad = [&]() -> InputError {
        return InputError("bad rational literal '" + text + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw bad();
    if (pos != text.size()) {
        if (text[pos] != '/') throw bad();
        ++pos;
        std::size_t den_digits = 0;
        bool all_zero = true;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] != '0') all_zero = false;
            ++pos;
            ++den_digits;
        }
        if (den_digits == 0 || pos != text.size()) throw bad();
        if (all_zero) throw InputError("rational with zero denominator '" + text + "'");
    }
    Rat q;
    if (q.set_str(text, 10) != 0) throw bad();
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& value) {
    return value.get_str();
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rat total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
    return total;
}

RatVec negated(const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

RatVec scaled(const RatVec& v, const Rat& s) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("vec_add: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("vec_sub: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

int lex_compare(const RatVec& a, const RatVec& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

bool lex_positive(const RatVec& v) {
    for (const Rat& q : v) {
        if (q > 0) return true;
        if (q < 0) return false;
    }
    return false;
}

std::string vec_str(const RatVec& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << rat_str(v[i]);
    }
    out << ')';
    return out.str();
}

std::size_t rank(RatMat rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rat inv = 1 / rows[r][col];
        for (std::size_t j = col; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rat factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<RatVec> solve_linear(RatMat rows, RatVec rhs) {
    if (rows.size() != rhs.size()) throw InputError("solve_linear: shape mismatch");
    if (rows.empty()) return RatVec{};
    const std::size_t cols = rows[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        std::swap(rhs[r], rhs[pivot]);
        const Rat inv = 1 / rows[r][col];
        for (std::size_t j = col; j < cols; ++j) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rat factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
            rhs[i] -= factor * rhs[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (rhs[i] != 0) return std::nullopt;  // 0 = nonzero row: inconsistent
    }
    RatVec x(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace coorth
