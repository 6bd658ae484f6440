#include "ginf/pro_sequence.hpp"

#include "ginf/error.hpp"

namespace ginf {

AbelianTower AbelianTower::explicit_tower(std::vector<std::size_t> ranks,
                                          std::vector<IntMatrix> bondings, std::string name) {
  if (ranks.empty())
    throw InvalidStructure("tower needs at least one group");
  if (bondings.size() + 1 != ranks.size())
    throw InvalidStructure("tower with " + std::to_string(ranks.size()) + " groups needs " +
                           std::to_string(ranks.size() - 1) + " bonding maps");
  for (std::size_t i = 0; i < bondings.size(); ++i)
    if (bondings[i].rows() != ranks[i] || bondings[i].cols() != ranks[i + 1])
      throw InvalidStructure("bond " + std::to_string(i) + " must be " +
                             std::to_string(ranks[i]) + "x" + std::to_string(ranks[i + 1]));
  AbelianTower t;
  t.kind_ = Kind::Explicit;
  t.name_ = std::move(name);
  t.ranks_ = std::move(ranks);
  t.bondings_ = std::move(bondings);
  return t;
}

AbelianTower AbelianTower::constant(IntMatrix a, std::string name) {
  if (!a.square())
    throw InvalidStructure("constant tower needs a square matrix");
  AbelianTower t;
  t.kind_ = Kind::Constant;
  t.name_ = std::move(name);
  t.ranks_ = {a.rows()};
  t.bondings_ = {std::move(a)};
  return t;
}

std::size_t AbelianTower::rank_at(std::size_t i) const {
  if (kind_ == Kind::Constant)
    return ranks_[0];
  if (i >= ranks_.size())
    throw IndexOutOfRange("tower has no group at index " + std::to_string(i));
  return ranks_[i];
}

const IntMatrix &AbelianTower::bonding(std::size_t i) const {
  if (kind_ == Kind::Constant)
    return bondings_[0];
  if (i >= bondings_.size())
    throw IndexOutOfRange("tower has no bonding map at index " + std::to_string(i));
  return bondings_[i];
}

std::optional<std::size_t> AbelianTower::length() const {
  if (kind_ == Kind::Constant)
    return std::nullopt;
  return ranks_.size();
}

std::string to_string(MLVerdict::Kind k) {
  switch (k) {
  case MLVerdict::Kind::Semistable: return "Semistable";
  case MLVerdict::Kind::StrictlyDescending: return "StrictlyDescending";
  case MLVerdict::Kind::InconclusiveWindow: return "InconclusiveWindow";
  }
  return "?";
}

WindowCheck ml_check_window(const AbelianTower &t, std::size_t m, std::size_t window) {
  if (auto len = t.length(); len && m + window >= *len)
    throw IndexOutOfRange("window [" + std::to_string(m) + ", " + std::to_string(m + window) +
                          "] runs past the last group " + std::to_string(*len - 1));

  WindowCheck out;
  out.chain.base = m;
  IntMatrix composite = IntMatrix::identity(t.rank_at(m));
  out.chain.lattices.push_back(image_lattice(composite));
  for (std::size_t k = m; k < m + window; ++k) {
    composite = composite * t.bonding(k);
    out.chain.lattices.push_back(image_lattice(composite));
    if (!lattice_includes(out.chain.lattices[out.chain.lattices.size() - 2],
                          out.chain.lattices.back()))
      throw Error("image chain is not nested at index " + std::to_string(k + 1));
  }

  const auto &ls = out.chain.lattices;
  std::size_t first_stable = ls.size() - 1;
  while (first_stable > 0 && ls[first_stable - 1] == ls.back())
    --first_stable;
  bool all_proper = true;
  for (std::size_t j = 0; j + 1 < ls.size(); ++j)
    all_proper = all_proper && ls[j] != ls[j + 1];

  MLVerdict &v = out.verdict;
  v.m = m;
  v.window = window;
  if (window - first_stable >= kConfirmingSteps) {
    v.kind = MLVerdict::Kind::Semistable;
    v.phi = m + first_stable;
  } else if (window > 0 && all_proper) {
    v.kind = MLVerdict::Kind::StrictlyDescending;
  } else {
    v.kind = MLVerdict::Kind::InconclusiveWindow;
  }
  return out;
}

MLVerdict ml_decide_constant(const IntMatrix &a) {
  if (!a.square())
    throw InvalidStructure("constant tower needs a square matrix");
  const std::size_t n = a.rows();
  // rank(A^k) is non-increasing and stops dropping by k = n.
  IntMatrix pk = IntMatrix::identity(n);
  std::size_t k = 0;
  std::size_t rk = n;
  for (;;) {
    IntMatrix next = pk * a;
    std::size_t rn = rank(next);
    if (rn == rk)
      break;
    pk = std::move(next);
    rk = rn;
    ++k;
  }
  // Images nest, so equality at one step propagates to every later step.
  IntMatrix here = image_lattice(pk);
  IntMatrix there = image_lattice(pk * a);
  MLVerdict v;
  v.step_index = lattice_index(here, there);
  if (here == there) {
    v.kind = MLVerdict::Kind::Semistable;
    v.phi = k;
  } else {
    v.kind = MLVerdict::Kind::StrictlyDescending;
  }
  return v;
}

Lim1Statement lim1_report(const MLVerdict &verdict, bool countable) {
  Lim1Statement s;
  switch (verdict.kind) {
  case MLVerdict::Kind::Semistable:
    s.kind = Lim1Statement::Kind::Trivial;
    s.text = "lim^1 trivial";
    s.citation = "If the inverse sequence of groups $\\{G_n\\}$ is semistable then "
                 "$\\varprojlim ^1\\{G_n\\}$ is trivial.";
    break;
  case MLVerdict::Kind::StrictlyDescending:
    if (countable) {
      s.kind = Lim1Statement::Kind::Nontrivial;
      s.text = "lim^1 nontrivial";
      s.citation = "If $\\varprojlim ^1\\{G_n\\}$ is trivial and each $G_n$ is countable, "
                   "then $\\{G_n\\}$ is semistable.";
    } else {
      s.text = "undetermined (groups not known to be countable)";
    }
    break;
  case MLVerdict::Kind::InconclusiveWindow:
    s.text = "undetermined";
    break;
  }
  return s;
}

} // namespace ginf
