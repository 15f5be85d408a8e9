// Exact rational coefficient field. All arithmetic in this project is over
// GMP rationals; nothing is ever rounded.
#ifndef GERM_RATIONAL_HPP
#define GERM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace germ {

using Rat = mpq_class;
using Int = mpz_class;

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" for proper fractions, bare "p" for integers (GMP's canonical form).
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

}  // namespace germ

#endif
