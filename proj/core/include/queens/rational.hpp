#pragma once

#include <gmpxx.h>

#include <string>

namespace queens {

// Exact rational arithmetic. Certificates are proofs, so nothing in the
// verification path may round.
using Rat = mpq_class;

// mpq_class(num, den) does not reduce, and GMP's equality assumes canonical
// form, so every ratio is built through here.
inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on garbage or q = 0.
Rat rat_parse(const std::string& text);

// Canonical "p" or "p/q" with q > 1.
std::string rat_str(const Rat& q);

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace queens
