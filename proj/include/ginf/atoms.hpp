#ifndef GINF_ATOMS_HPP
#define GINF_ATOMS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ginf {

/// Number of ends of a finitely generated group; no other values occur.
enum class EndCount { Zero, One, Two, Infinite };

std::string_view to_string(EndCount e);
std::optional<EndCount> parse_end_count(std::string_view text);
inline constexpr EndCount kAllEndCounts[] = {EndCount::Zero, EndCount::One,
                                             EndCount::Two, EndCount::Infinite};

/// Closed vocabulary of group properties. `Ends` is parameterized by an
/// EndCount; every other kind stands alone.
enum class AtomKind {
  Finite,
  Infinite,
  FG,
  FP,
  RecursivelyPresented,
  Ends,
  Semistable,
  SCInf,
  NoF2Subgroup,
  WordHyperbolic,
  OneRelator,
  VirtuallyMetanilpotent,
  Solvable,
  HasZxZQuotient,
  NormalInfFGInfIndexSubgroup,
  CommensuratedInfFGInfIndexSubgroup,
  SubnormalChainWitness,
  SubcommensuratedChainWitness,
  AscendingHNNOfInfFPBase,
  AscendingHNNBaseOneEnded,
  RelHypWithSemistablePeripherals,
  H1EpsSemistable,
  H2FreeAbelian,
  H2Trivial,
  H2Nontrivial,
  ProGroupStable,
};

struct Atom {
  AtomKind kind = AtomKind::Finite;
  EndCount ends = EndCount::Zero; // meaningful only for AtomKind::Ends

  static Atom of(AtomKind k) { return {k, EndCount::Zero}; }
  static Atom ends_atom(EndCount e) { return {AtomKind::Ends, e}; }

  friend bool operator==(const Atom &a, const Atom &b) {
    return a.kind == b.kind && (a.kind != AtomKind::Ends || a.ends == b.ends);
  }
  friend std::strong_ordering operator<=>(const Atom &a, const Atom &b) {
    if (auto c = a.kind <=> b.kind; c != 0)
      return c;
    if (a.kind != AtomKind::Ends)
      return std::strong_ordering::equal;
    return a.ends <=> b.ends;
  }
};

std::string to_string(const Atom &a);
/// Accepts the names printed by to_string, e.g. "Semistable", "Ends(One)".
std::optional<Atom> parse_atom(std::string_view text);
/// Every atom of the vocabulary, Ends expanded over the four end counts.
const std::vector<Atom> &all_atoms();

enum class Polarity { Holds, Fails };

inline Polarity opposite(Polarity p) {
  return p == Polarity::Holds ? Polarity::Fails : Polarity::Holds;
}
std::string_view to_string(Polarity p);

} // namespace ginf

#endif // GINF_ATOMS_HPP
