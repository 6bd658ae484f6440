#include "ginf/atoms.hpp"

#include <array>
#include <utility>

namespace ginf {

namespace {

constexpr std::array<std::pair<AtomKind, std::string_view>, 26> kAtomNames{{
    {AtomKind::Finite, "Finite"},
    {AtomKind::Infinite, "Infinite"},
    {AtomKind::FG, "FG"},
    {AtomKind::FP, "FP"},
    {AtomKind::RecursivelyPresented, "RecursivelyPresented"},
    {AtomKind::Ends, "Ends"},
    {AtomKind::Semistable, "Semistable"},
    {AtomKind::SCInf, "SCInf"},
    {AtomKind::NoF2Subgroup, "NoF2Subgroup"},
    {AtomKind::WordHyperbolic, "WordHyperbolic"},
    {AtomKind::OneRelator, "OneRelator"},
    {AtomKind::VirtuallyMetanilpotent, "VirtuallyMetanilpotent"},
    {AtomKind::Solvable, "Solvable"},
    {AtomKind::HasZxZQuotient, "HasZxZQuotient"},
    {AtomKind::NormalInfFGInfIndexSubgroup, "NormalInfFGInfIndexSubgroup"},
    {AtomKind::CommensuratedInfFGInfIndexSubgroup, "CommensuratedInfFGInfIndexSubgroup"},
    {AtomKind::SubnormalChainWitness, "SubnormalChainWitness"},
    {AtomKind::SubcommensuratedChainWitness, "SubcommensuratedChainWitness"},
    {AtomKind::AscendingHNNOfInfFPBase, "AscendingHNNOfInfFPBase"},
    {AtomKind::AscendingHNNBaseOneEnded, "AscendingHNNBaseOneEnded"},
    {AtomKind::RelHypWithSemistablePeripherals, "RelHypWithSemistablePeripherals"},
    {AtomKind::H1EpsSemistable, "H1EpsSemistable"},
    {AtomKind::H2FreeAbelian, "H2FreeAbelian"},
    {AtomKind::H2Trivial, "H2Trivial"},
    {AtomKind::H2Nontrivial, "H2Nontrivial"},
    {AtomKind::ProGroupStable, "ProGroupStable"},
}};

std::string_view kind_name(AtomKind k) {
  for (const auto &[kind, name] : kAtomNames)
    if (kind == k)
      return name;
  return "?";
}

} // namespace

std::string_view to_string(EndCount e) {
  switch (e) {
  case EndCount::Zero: return "Zero";
  case EndCount::One: return "One";
  case EndCount::Two: return "Two";
  case EndCount::Infinite: return "Infinite";
  }
  return "?";
}

std::optional<EndCount> parse_end_count(std::string_view text) {
  if (text == "Zero" || text == "0") return EndCount::Zero;
  if (text == "One" || text == "1") return EndCount::One;
  if (text == "Two" || text == "2") return EndCount::Two;
  if (text == "Infinite" || text == "inf") return EndCount::Infinite;
  return std::nullopt;
}

std::string to_string(const Atom &a) {
  std::string s(kind_name(a.kind));
  if (a.kind == AtomKind::Ends)
    s += "(" + std::string(to_string(a.ends)) + ")";
  return s;
}

std::optional<Atom> parse_atom(std::string_view text) {
  if (text.starts_with("Ends(") && text.ends_with(")")) {
    auto e = parse_end_count(text.substr(5, text.size() - 6));
    if (!e)
      return std::nullopt;
    return Atom::ends_atom(*e);
  }
  for (const auto &[kind, name] : kAtomNames)
    if (kind != AtomKind::Ends && name == text)
      return Atom::of(kind);
  return std::nullopt;
}

const std::vector<Atom> &all_atoms() {
  static const std::vector<Atom> atoms = [] {
    std::vector<Atom> out;
    for (const auto &[kind, name] : kAtomNames) {
      if (kind == AtomKind::Ends) {
        for (auto e : kAllEndCounts)
          out.push_back(Atom::ends_atom(e));
      } else {
        out.push_back(Atom::of(kind));
      }
    }
    return out;
  }();
  return atoms;
}

std::string_view to_string(Polarity p) {
  return p == Polarity::Holds ? "holds" : "fails";
}

} // namespace ginf
