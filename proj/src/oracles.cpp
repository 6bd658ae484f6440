#include <algorithm>
#include <string>

#include "ginf/error.hpp"
#include "ginf/oracle.hpp"
#include "ginf/tits.hpp"

namespace ginf {

ElementKey GroupOracle::normalize(const std::vector<std::size_t> &word) const {
  ElementKey k = identity();
  for (auto g : word) {
    if (g >= generators().size())
      throw InvalidStructure("generator index " + std::to_string(g) + " out of range");
    k = multiply(k, g);
  }
  return k;
}

namespace {

std::vector<OracleGenerator> letter_pairs(std::size_t rank) {
  std::vector<OracleGenerator> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    std::string lo, hi;
    if (rank <= 26) {
      lo = std::string(1, static_cast<char>('a' + i));
      hi = std::string(1, static_cast<char>('A' + i));
    } else {
      lo = "x" + std::to_string(i + 1);
      hi = "X" + std::to_string(i + 1);
    }
    gens.push_back({lo, false});
    gens.push_back({hi, false});
  }
  return gens;
}

class FreeAbelianOracle final : public GroupOracle {
public:
  explicit FreeAbelianOracle(std::size_t rank) : rank_(rank), gens_(letter_pairs(rank)) {}
  std::string description() const override { return "Z^" + std::to_string(rank_); }
  const std::vector<OracleGenerator> &generators() const override { return gens_; }
  ElementKey identity() const override { return ElementKey(rank_, 0); }
  ElementKey multiply(const ElementKey &e, std::size_t g) const override {
    ElementKey k = e;
    k[g / 2] += g % 2 ? -1 : 1;
    return k;
  }

private:
  std::size_t rank_;
  std::vector<OracleGenerator> gens_;
};

class FreeOracle final : public GroupOracle {
public:
  explicit FreeOracle(std::size_t rank) : rank_(rank), gens_(letter_pairs(rank)) {}
  std::string description() const override { return "F" + std::to_string(rank_); }
  const std::vector<OracleGenerator> &generators() const override { return gens_; }
  ElementKey identity() const override { return {}; }
  ElementKey multiply(const ElementKey &e, std::size_t g) const override {
    auto letter = static_cast<std::int32_t>(g / 2 + 1) * (g % 2 ? -1 : 1);
    ElementKey k = e;
    if (!k.empty() && k.back() == -letter)
      k.pop_back();
    else
      k.push_back(letter);
    return k;
  }

private:
  std::size_t rank_;
  std::vector<OracleGenerator> gens_;
};

class FiniteTableOracle final : public GroupOracle {
public:
  FiniteTableOracle(std::string description, std::vector<OracleGenerator> gens,
                    std::vector<std::vector<std::size_t>> table)
      : description_(std::move(description)), gens_(std::move(gens)), table_(std::move(table)) {
    if (table_.empty())
      throw InvalidStructure("finite table needs at least the identity");
    for (const auto &row : table_) {
      if (row.size() != gens_.size())
        throw InvalidStructure("finite table row has the wrong number of generators");
      for (auto x : row)
        if (x >= table_.size())
          throw InvalidStructure("finite table entry out of range");
    }
  }
  std::string description() const override { return description_; }
  const std::vector<OracleGenerator> &generators() const override { return gens_; }
  ElementKey identity() const override { return {0}; }
  ElementKey multiply(const ElementKey &e, std::size_t g) const override {
    return {static_cast<std::int32_t>(table_[static_cast<std::size_t>(e[0])][g])};
  }

private:
  std::string description_;
  std::vector<OracleGenerator> gens_;
  std::vector<std::vector<std::size_t>> table_;
};

class CoxeterOracle final : public GroupOracle {
public:
  CoxeterOracle(CoxeterSystem sys, std::size_t budget) : sys_(std::move(sys)), budget_(budget) {
    for (const auto &v : sys_.diagram().vertices())
      gens_.push_back({v, true});
  }
  std::string description() const override {
    return "Coxeter group on " + std::to_string(sys_.rank()) + " generators";
  }
  const std::vector<OracleGenerator> &generators() const override { return gens_; }
  ElementKey identity() const override { return {}; }
  ElementKey multiply(const ElementKey &e, std::size_t g) const override {
    GeneratorWord w(e.begin(), e.end());
    w.push_back(static_cast<int>(g));
    try {
      auto nf = tits_normal_form(w, sys_, budget_);
      return ElementKey(nf.begin(), nf.end());
    } catch (const OrbitBudgetExceeded &err) {
      throw OracleBudgetExceeded(err.what());
    }
  }

private:
  CoxeterSystem sys_;
  std::size_t budget_;
  std::vector<OracleGenerator> gens_;
};

// Keys are flattened (vertex, exponent) syllables in lexicographically least
// order among all shuffles by commuting syllables.
class CyclicGraphProductOracle final : public GroupOracle {
public:
  CyclicGraphProductOracle(LabeledGraph graph, std::vector<std::size_t> orders)
      : graph_(std::move(graph)), orders_(std::move(orders)) {
    if (orders_.size() != graph_.size())
      throw InvalidStructure("one cyclic order per vertex is required");
    for (std::size_t v = 0; v < graph_.size(); ++v) {
      if (orders_[v] == 1)
        throw InvalidStructure("vertex groups must be nontrivial");
      gens_.push_back({graph_.name(v), orders_[v] == 2});
      gen_vertex_.push_back(v);
      gen_exp_.push_back(1);
      if (orders_[v] != 2) {
        gens_.push_back({graph_.name(v) + "^-1", false});
        gen_vertex_.push_back(v);
        gen_exp_.push_back(-1);
      }
    }
  }

  std::string description() const override {
    return "graph product of cyclic groups on " + std::to_string(graph_.size()) + " vertices";
  }
  const std::vector<OracleGenerator> &generators() const override { return gens_; }
  ElementKey identity() const override { return {}; }

  ElementKey multiply(const ElementKey &e, std::size_t g) const override {
    const auto v = static_cast<std::int32_t>(gen_vertex_[g]);
    std::vector<std::pair<std::int32_t, std::int32_t>> syl;
    for (std::size_t i = 0; i + 1 < e.size(); i += 2)
      syl.emplace_back(e[i], e[i + 1]);

    bool merged = false;
    for (std::size_t j = syl.size(); j-- > 0;) {
      if (syl[j].first == v) {
        std::int32_t x = reduce_exponent(v, syl[j].second + gen_exp_[g]);
        if (x == 0)
          syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(j));
        else
          syl[j].second = x;
        merged = true;
        break;
      }
      if (!commute(syl[j].first, v))
        break;
    }
    if (!merged)
      syl.emplace_back(v, reduce_exponent(v, gen_exp_[g]));
    return canonical(syl);
  }

private:
  bool commute(std::int32_t a, std::int32_t b) const {
    return a != b && graph_.adjacent(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }

  std::int32_t reduce_exponent(std::int32_t v, std::int32_t x) const {
    auto m = static_cast<std::int32_t>(orders_[static_cast<std::size_t>(v)]);
    return m == 0 ? x : ((x % m) + m) % m;
  }

  ElementKey canonical(std::vector<std::pair<std::int32_t, std::int32_t>> syl) const {
    ElementKey out;
    out.reserve(syl.size() * 2);
    while (!syl.empty()) {
      std::size_t best = syl.size();
      for (std::size_t i = 0; i < syl.size(); ++i) {
        bool front = true;
        for (std::size_t j = 0; j < i && front; ++j)
          front = commute(syl[j].first, syl[i].first);
        if (front && (best == syl.size() || syl[i].first < syl[best].first))
          best = i;
      }
      out.push_back(syl[best].first);
      out.push_back(syl[best].second);
      syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
  }

  LabeledGraph graph_;
  std::vector<std::size_t> orders_;
  std::vector<OracleGenerator> gens_;
  std::vector<std::size_t> gen_vertex_;
  std::vector<std::int32_t> gen_exp_;
};

class ComposedOracle final : public GroupOracle {
public:
  ComposedOracle(CompositionKind kind, std::vector<OraclePtr> parts)
      : kind_(kind), parts_(std::move(parts)) {
    if (parts_.empty())
      throw InvalidStructure("composition needs at least one part");
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      identities_.push_back(parts_[p]->identity());
      const auto &pg = parts_[p]->generators();
      for (std::size_t g = 0; g < pg.size(); ++g) {
        gens_.push_back({pg[g].name + "_" + std::to_string(p + 1), pg[g].involution});
        owner_.emplace_back(p, g);
      }
    }
  }

  std::string description() const override {
    std::string s = kind_ == CompositionKind::DirectProduct ? "direct(" : "freeprod(";
    for (std::size_t p = 0; p < parts_.size(); ++p)
      s += (p ? ", " : "") + parts_[p]->description();
    return s + ")";
  }
  const std::vector<OracleGenerator> &generators() const override { return gens_; }

  ElementKey identity() const override {
    if (kind_ == CompositionKind::FreeProduct)
      return {};
    ElementKey k;
    for (const auto &id : identities_)
      append(k, id);
    return k;
  }

  ElementKey multiply(const ElementKey &e, std::size_t g) const override {
    auto [p, local] = owner_[g];
    if (kind_ == CompositionKind::DirectProduct) {
      auto parts = split(e, false);
      parts[p].second = parts_[p]->multiply(parts[p].second, local);
      ElementKey k;
      for (const auto &[_, pk] : parts)
        append(k, pk);
      return k;
    }
    auto syl = split(e, true);
    if (!syl.empty() && syl.back().first == p) {
      syl.back().second = parts_[p]->multiply(syl.back().second, local);
      if (syl.back().second == identities_[p])
        syl.pop_back();
    } else {
      auto k = parts_[p]->multiply(identities_[p], local);
      if (k != identities_[p])
        syl.emplace_back(p, std::move(k));
    }
    ElementKey out;
    for (const auto &[part, pk] : syl) {
      out.push_back(static_cast<std::int32_t>(part));
      append(out, pk);
    }
    return out;
  }

private:
  static void append(ElementKey &k, const ElementKey &part) {
    k.push_back(static_cast<std::int32_t>(part.size()));
    k.insert(k.end(), part.begin(), part.end());
  }

  // Direct: [len key]*; free: [part len key]*.
  std::vector<std::pair<std::size_t, ElementKey>> split(const ElementKey &e, bool tagged) const {
    std::vector<std::pair<std::size_t, ElementKey>> out;
    std::size_t i = 0, index = 0;
    while (i < e.size()) {
      std::size_t part = tagged ? static_cast<std::size_t>(e[i++]) : index++;
      auto len = static_cast<std::size_t>(e[i++]);
      out.emplace_back(part, ElementKey(e.begin() + static_cast<std::ptrdiff_t>(i),
                                        e.begin() + static_cast<std::ptrdiff_t>(i + len)));
      i += len;
    }
    return out;
  }

  CompositionKind kind_;
  std::vector<OraclePtr> parts_;
  std::vector<ElementKey> identities_;
  std::vector<OracleGenerator> gens_;
  std::vector<std::pair<std::size_t, std::size_t>> owner_;
};

} // namespace

OraclePtr free_abelian_oracle(std::size_t rank) {
  return std::make_shared<FreeAbelianOracle>(rank);
}

OraclePtr free_oracle(std::size_t rank) { return std::make_shared<FreeOracle>(rank); }

OraclePtr finite_table_oracle(std::string description, std::vector<OracleGenerator> gens,
                              std::vector<std::vector<std::size_t>> table) {
  return std::make_shared<FiniteTableOracle>(std::move(description), std::move(gens),
                                             std::move(table));
}

OraclePtr cyclic_oracle(std::size_t m) {
  if (m < 1)
    throw InvalidStructure("cyclic group order must be positive");
  std::vector<OracleGenerator> gens{{"a", m == 2}};
  if (m != 2)
    gens.push_back({"A", false});
  std::vector<std::vector<std::size_t>> table(m);
  for (std::size_t k = 0; k < m; ++k) {
    table[k].push_back((k + 1) % m);
    if (m != 2)
      table[k].push_back((k + m - 1) % m);
  }
  return finite_table_oracle("Z" + std::to_string(m), std::move(gens), std::move(table));
}

OraclePtr dihedral_oracle(std::size_t m) {
  if (m < 2)
    throw InvalidStructure("dihedral group needs m >= 2");
  // Element r^k s^e has index 2k + e, where s and t = r s are the generators.
  std::vector<std::vector<std::size_t>> table(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    table[2 * k] = {2 * k + 1, 2 * ((k + 1) % m) + 1};
    table[2 * k + 1] = {2 * k, 2 * ((k + m - 1) % m)};
  }
  return finite_table_oracle("I2(" + std::to_string(m) + ")", {{"s", true}, {"t", true}},
                             std::move(table));
}

OraclePtr coxeter_oracle(const CoxeterSystem &sys, std::size_t orbit_budget) {
  return std::make_shared<CoxeterOracle>(sys, orbit_budget);
}

OraclePtr cyclic_graph_product_oracle(const LabeledGraph &graph, std::vector<std::size_t> orders) {
  return std::make_shared<CyclicGraphProductOracle>(graph, std::move(orders));
}

OraclePtr compose_oracles(CompositionKind kind, std::vector<OraclePtr> parts) {
  return std::make_shared<ComposedOracle>(kind, std::move(parts));
}

} // namespace ginf
