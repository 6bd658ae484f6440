#include "ginf/inference.hpp"

namespace ginf {

namespace {

KnownFact fact(std::string catalog, Atom atom, Polarity pol, std::string tag, std::string quote) {
  return {std::move(catalog), atom, pol, {std::move(tag), std::move(quote)}};
}

KnownFact fact(std::string catalog, AtomKind kind, Polarity pol, std::string tag,
               std::string quote) {
  return fact(std::move(catalog), Atom::of(kind), pol, std::move(tag), std::move(quote));
}

std::vector<KnownFact> build_db() {
  constexpr auto holds = Polarity::Holds;
  constexpr auto fails = Polarity::Fails;
  const std::string lnss = "The lamplighter group is not semistable at $\\infty$.";
  const std::string lamplighter_pres =
      "It was conjectured in \\cite{M4} that the ``Lamplighter group\" with presentation:";
  const std::string exlsc = "is simply connected at $\\infty$.";
  const std::string exl_fp = "(called the extended lamplighter group) has finite presentation:";
  const std::string tgf = "$F$ is $n$-connected at $\\infty$ for all $n$";
  const std::string tgf_fp = "Then $F$ has finite presentation:";
  const std::string sln = "1-ended and simply connected at $\\infty$";
  const std::string sln_fp =
      "For $p$ a prime, the  group $SL_n(\\mathbb Z[{1\\over p}])$ is finitely presented.";
  const std::string davis_sc = "$G$ is not simply connected at $\\infty$";
  const std::string davis_h2 = "the first pro-homology of $G$ is trivial";
  const std::string grig = "the finitely generated group $G$ is simply connected at $\\infty$";

  return {
      fact("lamplighter", AtomKind::Semistable, fails, "LNss", lnss),
      fact("lamplighter", AtomKind::FG, holds, "NonSS", lamplighter_pres),
      fact("lamplighter", AtomKind::FP, fails, "NonSS", lamplighter_pres),
      fact("lamplighter", AtomKind::Infinite, holds, "NonSS", lamplighter_pres),
      fact("extended_lamplighter", AtomKind::SCInf, holds, "ExLsc", exlsc),
      fact("extended_lamplighter", AtomKind::FP, holds, "NonSS", exl_fp),
      fact("extended_lamplighter", AtomKind::Infinite, holds, "ExLsc", exlsc),
      fact("thompson_F", AtomKind::SCInf, holds, "TGF", tgf),
      fact("thompson_F", AtomKind::FP, holds, "TGF", tgf_fp),
      fact("thompson_F", AtomKind::Infinite, holds, "TGF", tgf),
      fact("SLn_Z_1_over_p", AtomKind::SCInf, holds, "SLn", sln),
      fact("SLn_Z_1_over_p", Atom::ends_atom(EndCount::One), holds, "SLn", sln),
      fact("SLn_Z_1_over_p", AtomKind::FP, holds, "SLn", sln_fp),
      fact("davis_examples", AtomKind::SCInf, fails, "RedH2-1", davis_sc),
      fact("davis_examples", AtomKind::H2Trivial, holds, "RedH2-1", davis_h2),
      fact("grigorchuk", AtomKind::SCInf, holds, "sc", grig),
      fact("grigorchuk", AtomKind::FG, holds, "sc", grig),
      fact("grigorchuk", AtomKind::Infinite, holds, "sc", grig),
  };
}

} // namespace

const std::vector<KnownFact> &known_groups_db() {
  static const std::vector<KnownFact> db = build_db();
  return db;
}

std::vector<KnownFact> known_facts(std::string_view catalog) {
  std::vector<KnownFact> out;
  for (const auto &f : known_groups_db())
    if (f.catalog == catalog)
      out.push_back(f);
  return out;
}

} // namespace ginf
