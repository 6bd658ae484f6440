#ifndef GINF_PRO_SEQUENCE_HPP
#define GINF_PRO_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginf/integer_matrix.hpp"

namespace ginf {

/// Inverse sequence G_0 <- G_1 <- G_2 <- ... of free abelian groups
/// G_i = Z^{n_i}. Bonding p_i : G_{i+1} -> G_i is an n_i x n_{i+1} matrix.
class AbelianTower {
public:
  enum class Kind { Explicit, Constant };

  /// Finite tower; `bondings.size() + 1 == ranks.size()` and shapes chain.
  static AbelianTower explicit_tower(std::vector<std::size_t> ranks,
                                     std::vector<IntMatrix> bondings, std::string name = {});
  /// Z^n <-A- Z^n <-A- ... continued forever.
  static AbelianTower constant(IntMatrix a, std::string name = {});

  Kind kind() const { return kind_; }
  const std::string &name() const { return name_; }

  std::size_t rank_at(std::size_t i) const;
  /// p_i; throws IndexOutOfRange past the end of an explicit tower.
  const IntMatrix &bonding(std::size_t i) const;
  /// Number of groups for explicit towers; nullopt for constant ones.
  std::optional<std::size_t> length() const;

  friend bool operator==(const AbelianTower &, const AbelianTower &) = default;

private:
  Kind kind_ = Kind::Explicit;
  std::string name_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> bondings_; // one matrix for constant towers
};

/// L_k = image of p_m o ... o p_{k-1} in G_m, for k = m, m+1, ...
struct ImageChain {
  std::size_t base = 0;
  std::vector<IntMatrix> lattices; // lattices[j] is L_{base + j}
};

struct MLVerdict {
  enum class Kind { Semistable, StrictlyDescending, InconclusiveWindow };

  Kind kind = Kind::InconclusiveWindow;
  std::size_t m = 0;
  /// Semistable: phi(m), the first index from which images agree.
  std::optional<std::size_t> phi;
  /// Constant towers: the eventual per-step index [L_k : L_{k+1}].
  std::optional<BigInt> step_index;
  /// InconclusiveWindow: the window length examined.
  std::size_t window = 0;

  friend bool operator==(const MLVerdict &, const MLVerdict &) = default;
};

std::string to_string(MLVerdict::Kind k);

/// Number of agreeing steps the window check demands before calling a chain
/// stable.
inline constexpr std::size_t kConfirmingSteps = 3;

struct WindowCheck {
  ImageChain chain;
  MLVerdict verdict;
};

/// Computes L_m ... L_{m+N} and classifies the chain.
/// Throws IndexOutOfRange when the tower ends before m + N.
WindowCheck ml_check_window(const AbelianTower &t, std::size_t m, std::size_t window);

/// Exact verdict for the constant tower of `a`.
MLVerdict ml_decide_constant(const IntMatrix &a);

struct Lim1Statement {
  enum class Kind { Trivial, Nontrivial, Undetermined };
  Kind kind = Kind::Undetermined;
  std::string text;
  std::string citation;
};

Lim1Statement lim1_report(const MLVerdict &verdict, bool countable = true);

/// Reads `tower [name] { ranks: ...; bond k: [..] [..]; }` and
/// `tower constant [name] { rank n; matrix [..] [..]; }` blocks.
std::vector<AbelianTower> parse_towers(std::string_view text);

} // namespace ginf

#endif // GINF_PRO_SEQUENCE_HPP
