#include "ginf/cayley.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ginf/error.hpp"

namespace ginf {

namespace {

struct KeyHash {
  std::size_t operator()(const ElementKey &k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : k) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

bool BallGraph::exhausted() const {
  return std::none_of(frontier.begin(), frontier.end(), [](char c) { return c != 0; });
}

std::vector<std::size_t> BallGraph::sphere_sizes() const {
  std::vector<std::size_t> s(radius + 1, 0);
  for (auto d : distance)
    ++s[d];
  return s;
}

std::string BallGraph::serialize() const {
  std::ostringstream os;
  os << "radius " << radius << "\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    os << i << " d=" << distance[i] << " key=[";
    for (std::size_t j = 0; j < elements[i].size(); ++j)
      os << (j ? " " : "") << elements[i][j];
    os << "] nbr=";
    for (std::size_t g = 0; g < neighbors[i].size(); ++g) {
      if (g)
        os << ",";
      if (neighbors[i][g] == kOutsideBall)
        os << "-";
      else
        os << neighbors[i][g];
    }
    os << (frontier[i] ? " frontier" : "") << "\n";
  }
  return os.str();
}

BallGraph build_ball(const GroupOracle &oracle, std::size_t radius, std::size_t element_cap) {
  BallGraph b;
  b.radius = radius;
  b.generators = oracle.generators();
  const std::size_t ngen = b.generators.size();

  std::unordered_map<ElementKey, std::uint32_t, KeyHash> index;
  auto add = [&](ElementKey k, std::uint32_t d, std::uint32_t parent, std::uint32_t gen) {
    if (b.elements.size() >= element_cap)
      throw MemoryCapExceeded(element_cap);
    auto id = static_cast<std::uint32_t>(b.elements.size());
    index.emplace(k, id);
    b.elements.push_back(std::move(k));
    b.distance.push_back(d);
    b.neighbors.emplace_back(ngen, kOutsideBall);
    b.parent.push_back(parent);
    b.parent_generator.push_back(gen);
    b.frontier.push_back(0);
    return id;
  };
  add(oracle.identity(), 0, 0, 0);

  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    const std::uint32_t d = b.distance[i];
    for (std::size_t g = 0; g < ngen; ++g) {
      ElementKey next = oracle.multiply(b.elements[i], g);
      auto it = index.find(next);
      if (it != index.end()) {
        b.neighbors[i][g] = it->second;
      } else if (d < radius) {
        b.neighbors[i][g] = add(std::move(next), d + 1, static_cast<std::uint32_t>(i),
                                static_cast<std::uint32_t>(g));
      } else {
        b.frontier[i] = 1;
      }
    }
  }
  return b;
}

std::optional<std::string> check_ball_invariants(const BallGraph &ball) {
  if (ball.elements.empty() || ball.distance[0] != 0)
    return "identity missing or not at distance 0";
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto d = ball.distance[i];
    if (d > ball.radius)
      return "element " + std::to_string(i) + " lies beyond the radius";
    bool has_closer = d == 0;
    for (auto j : ball.neighbors[i]) {
      if (j == kOutsideBall) {
        if (d != ball.radius)
          return "element " + std::to_string(i) + " has an outside neighbor below the radius";
        continue;
      }
      auto dj = ball.distance[j];
      if ((dj > d ? dj - d : d - dj) > 1)
        return "edge " + std::to_string(i) + "-" + std::to_string(j) + " jumps distance";
      has_closer = has_closer || dj + 1 == d;
    }
    if (!has_closer)
      return "element " + std::to_string(i) + " has no neighbor one step closer";
  }
  return std::nullopt;
}

std::string to_string(EndEstimate::Verdict v) {
  switch (v) {
  case EndEstimate::Verdict::Stabilized: return "Stabilized";
  case EndEstimate::Verdict::GrowingToInfinity: return "GrowingToInfinity";
  case EndEstimate::Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<int> components_beyond(const BallGraph &ball, std::size_t r) {
  std::vector<int> label(ball.size(), -1);
  int next = 0;
  std::vector<std::uint32_t> stack;
  for (std::size_t s = 0; s < ball.size(); ++s) {
    if (ball.distance[s] <= r || label[s] >= 0)
      continue;
    label[s] = next;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : ball.neighbors[u])
        if (w != kOutsideBall && ball.distance[w] > r && label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

namespace {

std::size_t outer_touching(const BallGraph &ball, std::size_t r) {
  if (r == 0)
    return ball.exhausted() ? 0 : 1;
  auto label = components_beyond(ball, r - 1);
  std::vector<char> touching;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (label[i] < 0)
      continue;
    auto c = static_cast<std::size_t>(label[i]);
    if (touching.size() <= c)
      touching.resize(c + 1, 0);
    if (ball.frontier[i])
      touching[c] = 1;
  }
  return static_cast<std::size_t>(std::count(touching.begin(), touching.end(), 1));
}

} // namespace

EndEstimate estimate_ends(const BallGraph &ball, std::size_t r_min, std::size_t r_max) {
  if (r_min > r_max || r_max + 2 > ball.radius)
    throw WindowTooSmall("window [" + std::to_string(r_min) + ", " + std::to_string(r_max) +
                         "] needs r_min <= r_max <= R - 2 with R = " +
                         std::to_string(ball.radius));
  EndEstimate est;
  est.radius = ball.radius;
  est.r_min = r_min;
  est.r_max = r_max;
  for (std::size_t r = r_min; r <= r_max; ++r)
    est.per_radius.emplace_back(r, outer_touching(ball, r));

  const std::size_t len = est.per_radius.size();
  const std::size_t tail = (len + 1) / 2;
  const std::size_t last = est.per_radius.back().second;
  bool stable = true;
  for (std::size_t i = len - tail; i < len; ++i)
    stable = stable && est.per_radius[i].second == last;
  bool growing = len >= 2;
  for (std::size_t i = 1; i < len; ++i)
    growing = growing && est.per_radius[i].second > est.per_radius[i - 1].second;

  // A sphere smaller than the one before it means the ball is closing up
  // around a finite group; the outer sphere is then not "far out".
  auto spheres = ball.sphere_sizes();
  const bool closing = !ball.exhausted() && ball.radius >= 1 &&
                       spheres[ball.radius] < spheres[ball.radius - 1];

  if (closing) {
    est.verdict = EndEstimate::Verdict::Inconclusive;
    est.note = "outer sphere is shrinking; the group may be finite beyond the radius";
  } else if (stable && last <= 2) {
    est.verdict = EndEstimate::Verdict::Stabilized;
    est.stabilized = last == 0 ? EndCount::Zero : last == 1 ? EndCount::One : EndCount::Two;
    est.note = "unbounded components approximated by components meeting the outer sphere";
  } else if (growing) {
    est.verdict = EndEstimate::Verdict::GrowingToInfinity;
    est.note = "heuristic: counts grow across the window";
  } else {
    est.verdict = EndEstimate::Verdict::Inconclusive;
    est.note = "counts neither settle in {0, 1, 2} nor grow strictly";
  }
  return est;
}

std::vector<std::vector<std::size_t>> sample_geodesic_segments(const BallGraph &ball,
                                                               std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (ball.elements.empty())
    return out;
  auto label = components_beyond(ball, 0);
  int ncomp = 0;
  for (int l : label)
    ncomp = std::max(ncomp, l + 1);
  std::vector<std::int64_t> pick(static_cast<std::size_t>(ncomp), -1);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (label[i] < 0 || !ball.frontier[i] || ball.distance[i] != ball.radius)
      continue;
    auto &p = pick[static_cast<std::size_t>(label[i])];
    if (p < 0 || ball.elements[i] < ball.elements[static_cast<std::size_t>(p)])
      p = static_cast<std::int64_t>(i);
  }
  for (auto p : pick) {
    if (p < 0 || out.size() >= k)
      continue;
    std::vector<std::size_t> word;
    for (auto u = static_cast<std::uint32_t>(p); u != 0; u = ball.parent[u])
      word.push_back(ball.parent_generator[u]);
    std::reverse(word.begin(), word.end());
    out.push_back(std::move(word));
  }
  return out;
}

} // namespace ginf
