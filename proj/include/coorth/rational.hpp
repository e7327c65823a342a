#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coorth/errors.hpp"

namespace coorth {

// All arithmetic in the library is exact.  Rationals are GMP mpq_class
// values kept canonical (lowest terms, positive denominator); every
// constructor path below canonicalizes.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

Rat rat(long num, long den = 1);

/// Parses "p", "p/q" or "-p/q" (q > 0).  Throws InputError otherwise.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& value);

Rat dot(const RatVec& a, const RatVec& b);
RatVec negated(const RatVec& v);
RatVec scaled(const RatVec& v, const Rat& s);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);

/// Lexicographic three-way comparison.  Shorter vectors compare less
/// when one is a prefix of the other (lengths normally agree).
int lex_compare(const RatVec& a, const RatVec& b);

/// True when the first nonzero entry is positive (used to pick one
/// representative per antipodal pair).
bool lex_positive(const RatVec& v);

std::string vec_str(const RatVec& v);

std::size_t rank(RatMat rows);

/// Any exact solution of rows * x = rhs, or nullopt when inconsistent.
/// Free variables are fixed to zero.
std::optional<RatVec> solve_linear(RatMat rows, RatVec rhs);

}  // namespace coorth
