#include "ginf/tits.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ginf/error.hpp"

namespace ginf {

namespace {

// Words are kept as byte strings for cheap hashing.
using Bytes = std::string;

// Cancels adjacent equal letters until none remain (s s = 1).
Bytes cancel_pairs(const Bytes &w) {
  Bytes out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Index of a repeated adjacent pair inside [lo, hi) of positions, or npos.
std::size_t find_square(const Bytes &w, std::size_t lo, std::size_t hi) {
  hi = std::min(hi, w.size() - 1);
  for (std::size_t i = lo; i < hi; ++i)
    if (w[i] == w[i + 1])
      return i;
  return Bytes::npos;
}

} // namespace

GeneratorWord tits_normal_form(const GeneratorWord &word, const CoxeterSystem &sys,
                               std::size_t orbit_budget) {
  const std::size_t n = sys.rank();
  if (n > 255)
    throw InvalidStructure("too many generators for the word solver");
  Bytes w;
  w.reserve(word.size());
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= n)
      throw InvalidStructure("letter " + std::to_string(s) + " is not a generator");
    w.push_back(static_cast<char>(s));
  }

  std::unordered_set<Bytes> seen;
  std::vector<Bytes> queue;
  for (;;) {
    w = cancel_pairs(w);
    if (w.size() < 2)
      break;

    seen.clear();
    queue.clear();
    seen.insert(w);
    queue.push_back(w);
    Bytes best = w;
    bool shortened = false;
    for (std::size_t head = 0; head < queue.size() && !shortened; ++head) {
      const Bytes cur = queue[head];
      const std::size_t len = cur.size();
      for (std::size_t i = 0; i + 1 < len; ++i) {
        const auto a = static_cast<unsigned char>(cur[i]);
        const auto b = static_cast<unsigned char>(cur[i + 1]);
        const int m = sys.m(a, b);
        if (m == 0 || i + static_cast<std::size_t>(m) > len)
          continue;
        bool alternating = true;
        for (int k = 2; k < m && alternating; ++k)
          alternating = cur[i + k] == cur[i + (k % 2)];
        if (!alternating)
          continue;
        Bytes nxt = cur;
        for (int k = 0; k < m; ++k)
          nxt[i + k] = (k % 2 == 0) ? cur[i + 1] : cur[i];
        if (!seen.insert(nxt).second)
          continue;
        std::size_t sq = find_square(nxt, i == 0 ? 0 : i - 1, i + m);
        if (sq != Bytes::npos) {
          w = nxt.erase(sq, 2);
          shortened = true;
          break;
        }
        if (seen.size() > orbit_budget)
          throw OrbitBudgetExceeded(orbit_budget);
        if (nxt < best)
          best = nxt;
        queue.push_back(std::move(nxt));
      }
    }
    if (!shortened) {
      w = best;
      break;
    }
  }
  return GeneratorWord(w.begin(), w.end());
}

} // namespace ginf
