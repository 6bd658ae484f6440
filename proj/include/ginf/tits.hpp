#ifndef GINF_TITS_HPP
#define GINF_TITS_HPP

#include <cstddef>
#include <vector>

#include "ginf/coxeter.hpp"

namespace ginf {

/// Word over the generators of a Coxeter system, by generator index.
using GeneratorWord = std::vector<int>;

inline constexpr std::size_t kDefaultOrbitBudget = 200000;

/// Canonical reduced word of the element represented by `word`.
///
/// Repeatedly searches the braid-move orbit of the current word for a word
/// containing a repeated adjacent letter, deletes that pair, and restarts.
/// Once no such word exists the input is reduced and the lexicographically
/// least word of its orbit is returned. Two words give the same result iff
/// they are equal in W.
///
/// Throws OrbitBudgetExceeded when an orbit grows past `orbit_budget` words,
/// and InvalidStructure on a letter outside the generating set.
GeneratorWord tits_normal_form(const GeneratorWord &word, const CoxeterSystem &sys,
                               std::size_t orbit_budget = kDefaultOrbitBudget);

} // namespace ginf

#endif // GINF_TITS_HPP
