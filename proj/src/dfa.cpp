#include "arbor/dfa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace arbor {

namespace {

// Simple NFA with epsilon moves; only used internally for the group
// constructions, everything is determinized and minimized on the way out.
struct Nfa {
  std::int32_t letters = 0;
  std::int32_t start = 0;
  std::vector<std::vector<std::vector<std::int32_t>>> delta;  // state x letter -> targets
  std::vector<std::vector<std::int32_t>> eps;
  std::vector<bool> accepting;

  std::int32_t add_state() {
    delta.emplace_back(letters);
    eps.emplace_back();
    accepting.push_back(false);
    return static_cast<std::int32_t>(accepting.size()) - 1;
  }
};

std::vector<std::int32_t> eps_closure(const Nfa& n, std::vector<std::int32_t> states) {
  std::set<std::int32_t> seen(states.begin(), states.end());
  std::vector<std::int32_t> stack = states;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto t : n.eps[s])
      if (seen.insert(t).second) stack.push_back(t);
  }
  return {seen.begin(), seen.end()};
}

Dfa determinize(const Nfa& n) {
  Dfa d;
  d.letters = n.letters;
  std::map<std::vector<std::int32_t>, std::int32_t> ids;
  std::vector<std::vector<std::int32_t>> todo;

  auto intern = [&](std::vector<std::int32_t> set) {
    auto [it, fresh] = ids.try_emplace(set, static_cast<std::int32_t>(ids.size()));
    if (fresh) {
      todo.push_back(it->first);
      d.trans.resize(ids.size() * n.letters, -1);
      bool acc = false;
      for (auto s : it->first) acc |= n.accepting[s];
      d.accepting.push_back(acc);
    }
    return it->second;
  };

  d.start = intern(eps_closure(n, {n.start}));
  for (std::size_t i = 0; i < todo.size(); ++i) {
    auto set = todo[i];
    std::int32_t sid = ids.at(set);
    for (Letter l = 0; l < n.letters; ++l) {
      std::set<std::int32_t> nxt;
      for (auto s : set)
        for (auto t : n.delta[s][l]) nxt.insert(t);
      if (nxt.empty()) continue;
      auto closed = eps_closure(n, {nxt.begin(), nxt.end()});
      d.trans[std::size_t(sid) * n.letters + l] = intern(closed);
    }
  }
  return minimize(d);
}

Nfa to_nfa(const Dfa& a) {
  Nfa n;
  n.letters = a.letters;
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    n.add_state();
    n.accepting[s] = a.accepting[s];
  }
  if (a.state_count() == 0) n.add_state();
  for (std::int32_t s = 0; s < a.state_count(); ++s)
    for (Letter l = 0; l < a.letters; ++l)
      if (a.next(s, l) >= 0) n.delta[s][l].push_back(a.next(s, l));
  n.start = a.start;
  return n;
}

}  // namespace

bool Dfa::accepts(const Word& w) const {
  if (state_count() == 0) return false;
  std::int32_t s = start;
  for (Letter l : w.letters) {
    s = next(s, l);
    if (s < 0) return false;
  }
  return accepting[s];
}

bool Dfa::empty() const {
  for (bool a : accepting)
    if (a) return false;
  return true;
}

bool Dfa::finite() const {
  // canonical form keeps only useful states, so any cycle means infinite
  const std::int32_t n = state_count();
  std::vector<int> color(n, 0);
  std::vector<std::pair<std::int32_t, Letter>> stack;
  for (std::int32_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    stack.push_back({root, 0});
    color[root] = 1;
    while (!stack.empty()) {
      auto& [s, l] = stack.back();
      if (l >= letters) {
        color[s] = 2;
        stack.pop_back();
        continue;
      }
      std::int32_t t = next(s, l++);
      if (t < 0) continue;
      if (color[t] == 1) return false;
      if (color[t] == 0) {
        color[t] = 1;
        stack.push_back({t, 0});
      }
    }
  }
  return true;
}

std::optional<std::int64_t> Dfa::exact_size() const {
  if (!finite()) return std::nullopt;
  // count paths start -> accepting in the DAG
  const std::int32_t n = state_count();
  std::vector<std::int64_t> count(n, -1);
  std::vector<std::int32_t> order;
  // topological order by DFS completion
  std::vector<int> seen(n, 0);
  std::vector<std::pair<std::int32_t, Letter>> stack{{start, 0}};
  if (n == 0) return 0;
  seen[start] = 1;
  while (!stack.empty()) {
    auto& [s, l] = stack.back();
    if (l >= letters) {
      order.push_back(s);
      stack.pop_back();
      continue;
    }
    std::int32_t t = next(s, l++);
    if (t >= 0 && !seen[t]) {
      seen[t] = 1;
      stack.push_back({t, 0});
    }
  }
  for (std::int32_t s : order) {
    std::int64_t c = accepting[s] ? 1 : 0;
    for (Letter l = 0; l < letters; ++l)
      if (next(s, l) >= 0) c += count[next(s, l)];
    count[s] = c;
  }
  return count[start];
}

std::vector<Word> Dfa::enumerate(std::int64_t limit) const {
  std::vector<Word> out;
  if (state_count() == 0) return out;
  std::queue<std::pair<std::int32_t, Word>> q;
  q.push({start, {}});
  while (!q.empty() && static_cast<std::int64_t>(out.size()) < limit) {
    auto [s, w] = q.front();
    q.pop();
    if (accepting[s]) out.push_back(w);
    for (Letter l = 0; l < letters; ++l) {
      if (next(s, l) < 0) continue;
      Word w2 = w;
      w2.letters.push_back(l);
      q.push({next(s, l), std::move(w2)});
    }
  }
  return out;
}

std::size_t Dfa::hash() const {
  std::size_t h = std::size_t(letters) * 1000003u + std::size_t(start);
  for (std::int32_t t : trans) h = h * 1315423911u + std::size_t(t + 2);
  for (bool a : accepting) h = h * 2654435761u + (a ? 7 : 3);
  return h;
}

Dfa minimize(const Dfa& input) {
  const std::int32_t n = input.state_count();
  const std::int32_t L = input.letters;

  // 1. trim: reachable from start, co-reachable to an accepting state
  std::vector<bool> reach(n, false);
  if (n > 0) {
    std::vector<std::int32_t> stack{input.start};
    reach[input.start] = true;
    while (!stack.empty()) {
      auto s = stack.back();
      stack.pop_back();
      for (Letter l = 0; l < L; ++l) {
        auto t = input.next(s, l);
        if (t >= 0 && !reach[t]) {
          reach[t] = true;
          stack.push_back(t);
        }
      }
    }
  }
  std::vector<bool> useful(n, false);
  {
    std::vector<std::vector<std::int32_t>> rev(n);
    std::vector<std::int32_t> stack;
    for (std::int32_t s = 0; s < n; ++s)
      for (Letter l = 0; l < L; ++l)
        if (input.next(s, l) >= 0) rev[input.next(s, l)].push_back(s);
    for (std::int32_t s = 0; s < n; ++s)
      if (input.accepting[s] && reach[s]) {
        useful[s] = true;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      auto s = stack.back();
      stack.pop_back();
      for (auto p : rev[s])
        if (reach[p] && !useful[p]) {
          useful[p] = true;
          stack.push_back(p);
        }
    }
  }

  std::vector<std::int32_t> keep;
  for (std::int32_t s = 0; s < n; ++s)
    if (useful[s]) keep.push_back(s);
  if (keep.empty() || !useful[input.start]) {
    Dfa e;
    e.letters = L;
    e.start = 0;
    e.accepting = {false};
    e.trans.assign(L, -1);
    return e;
  }

  std::vector<std::int32_t> id(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<std::int32_t>(i);

  // 2. Moore refinement over the trimmed automaton
  const std::int32_t m = static_cast<std::int32_t>(keep.size());
  std::vector<std::int32_t> cls(m);
  for (std::int32_t i = 0; i < m; ++i) cls[i] = input.accepting[keep[i]] ? 1 : 0;
  for (;;) {
    std::map<std::vector<std::int32_t>, std::int32_t> sig;
    std::vector<std::int32_t> next_cls(m);
    for (std::int32_t i = 0; i < m; ++i) {
      std::vector<std::int32_t> key{cls[i]};
      for (Letter l = 0; l < L; ++l) {
        auto t = input.next(keep[i], l);
        key.push_back(t >= 0 && id[t] >= 0 ? cls[id[t]] : -1);
      }
      auto [it, fresh] = sig.try_emplace(key, static_cast<std::int32_t>(sig.size()));
      (void)fresh;
      next_cls[i] = it->second;
    }
    bool stable = true;
    for (std::int32_t i = 0; i < m; ++i) stable &= (next_cls[i] == cls[i]);
    cls = std::move(next_cls);
    if (stable) break;
  }

  // 3. BFS renumber classes from the start state
  std::int32_t nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::int32_t> rep(nclasses, -1);
  for (std::int32_t i = 0; i < m; ++i)
    if (rep[cls[i]] < 0) rep[cls[i]] = keep[i];

  std::vector<std::int32_t> order(nclasses, -1);
  std::int32_t counter = 0;
  std::queue<std::int32_t> bfs;
  auto start_cls = cls[id[input.start]];
  order[start_cls] = counter++;
  bfs.push(start_cls);
  while (!bfs.empty()) {
    auto c = bfs.front();
    bfs.pop();
    for (Letter l = 0; l < L; ++l) {
      auto t = input.next(rep[c], l);
      if (t < 0 || id[t] < 0) continue;
      auto tc = cls[id[t]];
      if (order[tc] < 0) {
        order[tc] = counter++;
        bfs.push(tc);
      }
    }
  }

  Dfa out;
  out.letters = L;
  out.start = 0;
  out.accepting.assign(counter, false);
  out.trans.assign(std::size_t(counter) * L, -1);
  for (std::int32_t c = 0; c < nclasses; ++c) {
    if (order[c] < 0) continue;  // unreachable class (possible only pre-trim)
    out.accepting[order[c]] = input.accepting[rep[c]];
    for (Letter l = 0; l < L; ++l) {
      auto t = input.next(rep[c], l);
      out.trans[std::size_t(order[c]) * L + l] =
          (t >= 0 && id[t] >= 0) ? order[cls[id[t]]] : -1;
    }
  }
  return out;
}

Dfa reduced_universe(const Basis& basis) {
  const std::int32_t L = basis.letter_count();
  Dfa d;
  d.letters = L;
  d.start = 0;
  d.accepting.assign(1 + L, true);
  d.trans.assign(std::size_t(1 + L) * L, -1);
  for (Letter l = 0; l < L; ++l) d.trans[l] = 1 + l;
  for (Letter last = 0; last < L; ++last)
    for (Letter l = 0; l < L; ++l)
      if (l != inv(last)) d.trans[std::size_t(1 + last) * L + l] = 1 + l;
  return minimize(d);
}

Dfa empty_language(const Basis& basis) {
  Dfa e;
  e.letters = basis.letter_count();
  e.start = 0;
  e.accepting = {false};
  e.trans.assign(e.letters, -1);
  return e;
}

Dfa singleton(const Basis& basis, const Word& w) {
  const std::int32_t L = basis.letter_count();
  Dfa d;
  d.letters = L;
  d.start = 0;
  const auto n = static_cast<std::int32_t>(w.size());
  d.accepting.assign(n + 1, false);
  d.accepting[n] = true;
  d.trans.assign(std::size_t(n + 1) * L, -1);
  for (std::int32_t i = 0; i < n; ++i) d.trans[std::size_t(i) * L + w.letters[i]] = i + 1;
  return minimize(d);
}

namespace {

template <typename F>
Dfa product(const Dfa& a, const Dfa& b, F acc) {
  Dfa d;
  d.letters = a.letters;
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> ids;
  std::vector<std::pair<std::int32_t, std::int32_t>> todo;
  auto intern = [&](std::int32_t x, std::int32_t y) {
    auto [it, fresh] = ids.try_emplace(std::pair{x, y}, static_cast<std::int32_t>(ids.size()));
    if (fresh) {
      todo.push_back({x, y});
      d.trans.resize(ids.size() * a.letters, -1);
      bool ax = x >= 0 && a.accepting[x];
      bool by = y >= 0 && b.accepting[y];
      d.accepting.push_back(acc(ax, by));
    }
    return it->second;
  };
  if (a.state_count() == 0 || b.state_count() == 0) {
    d.start = 0;
    d.accepting = {false};
    d.trans.assign(a.letters, -1);
    return d;
  }
  d.start = intern(a.start, b.start);
  for (std::size_t i = 0; i < todo.size(); ++i) {
    auto [x, y] = todo[i];
    std::int32_t sid = ids.at({x, y});
    for (Letter l = 0; l < a.letters; ++l) {
      std::int32_t tx = x >= 0 ? a.next(x, l) : -1;
      std::int32_t ty = y >= 0 ? b.next(y, l) : -1;
      if (tx < 0 && ty < 0) continue;
      d.trans[std::size_t(sid) * a.letters + l] = intern(tx, ty);
    }
  }
  return minimize(d);
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.letters != b.letters) throw StructuralError("alphabet mismatch");
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa unite(const Dfa& a, const Dfa& b) {
  if (a.letters != b.letters) throw StructuralError("alphabet mismatch");
  return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa complement(const Basis& basis, const Dfa& a) {
  // complete a against the reduced universe, flip, re-intersect
  Dfa u = reduced_universe(basis);
  return product(u, a, [](bool x, bool y) { return x && !y; });
}

bool subset(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && !y; }).empty();
}

Dfa left_mult(const Basis& basis, Letter x, const Dfa& a) {
  // reduce(x.L) = x.(L minus words starting with x^-1) u {w : x^-1 w in L}
  Nfa n = to_nfa(a);
  std::int32_t s0 = n.add_state();
  // branch 1: prepend x, entering a copy of the start whose x^-1 arrow is cut.
  // L contains reduced words only, so following x^-1 after x never accepts;
  // the cut is still made explicitly to keep the automaton reduced-only.
  std::int32_t cut = n.add_state();
  n.accepting[cut] = n.accepting[a.start];
  for (Letter l = 0; l < n.letters; ++l)
    if (l != inv(x)) n.delta[cut][l] = n.delta[a.start][l];
  n.delta[s0][x].push_back(cut);
  // branch 2: the x^-1 derivative
  if (a.state_count() > 0 && a.next(a.start, inv(x)) >= 0)
    n.eps[s0].push_back(a.next(a.start, inv(x)));
  n.start = s0;
  Dfa d = determinize(n);
  return intersect(d, reduced_universe(basis));
}

Dfa left_mult(const Basis& basis, const Word& g, const Dfa& a) {
  Dfa cur = a;
  for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it)
    cur = left_mult(basis, *it, cur);
  return cur;
}

namespace {

Dfa reverse(const Dfa& a) {
  Nfa n;
  n.letters = a.letters;
  for (std::int32_t s = 0; s <= a.state_count(); ++s) n.add_state();
  // state a.state_count() is the new start, epsilon to every accepting state
  n.start = a.state_count();
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    if (a.accepting[s]) n.eps[n.start].push_back(s);
    for (Letter l = 0; l < a.letters; ++l)
      if (a.next(s, l) >= 0) n.delta[a.next(s, l)][l].push_back(s);
  }
  if (a.state_count() > 0) n.accepting[a.start] = true;
  return determinize(n);
}

}  // namespace

Dfa right_mult(const Basis& basis, const Dfa& a, Letter x) {
  // reverse(w x) = x^R w^R with letters unchanged, so conjugate by reversal
  return reverse(left_mult(basis, x, reverse(a)));
}

Dfa right_mult(const Basis& basis, const Dfa& a, const Word& g) {
  Dfa cur = a;
  for (Letter l : g.letters) cur = right_mult(basis, cur, l);
  return cur;
}

Dfa morphism_image(const Basis& basis, const Dfa& a, const std::vector<Word>& letter_images) {
  if (letter_images.size() != std::size_t(basis.rank()))
    throw StructuralError("need an image per basis symbol");
  // substitute each letter edge by a path spelling its image
  Nfa n;
  n.letters = basis.letter_count();
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    n.add_state();
    n.accepting[s] = a.accepting[s];
  }
  n.start = a.start;
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    for (Letter l = 0; l < a.letters; ++l) {
      std::int32_t t = a.next(s, l);
      if (t < 0) continue;
      Word img = positive(l) ? letter_images[basis_of(l)]
                             : inverse(letter_images[basis_of(l)]);
      if (img.empty()) {
        n.eps[s].push_back(t);
        continue;
      }
      std::int32_t cur = s;
      for (std::size_t i = 0; i < img.size(); ++i) {
        std::int32_t nxt = i + 1 == img.size() ? t : n.add_state();
        n.delta[cur][img.letters[i]].push_back(nxt);
        cur = nxt;
      }
    }
  }

  // free-reduction saturation: add eps p->q whenever p -l-> r ~eps~ s -l^-1-> q
  bool changed = true;
  while (changed) {
    changed = false;
    // p -l-> r, s -inv(l)-> q with eps-path r => s
    for (std::int32_t p = 0; p < static_cast<std::int32_t>(n.accepting.size()); ++p) {
      for (Letter l = 0; l < n.letters; ++l) {
        for (std::int32_t r : n.delta[p][l]) {
          auto reach = eps_closure(n, {r});
          for (std::int32_t s : reach) {
            for (std::int32_t q : n.delta[s][inv(l)]) {
              if (p == q) continue;
              auto& ep = n.eps[p];
              if (std::find(ep.begin(), ep.end(), q) == ep.end()) {
                ep.push_back(q);
                changed = true;
              }
            }
          }
        }
      }
    }
  }

  Dfa d = determinize(n);
  return intersect(d, reduced_universe(basis));
}

Dfa graph_language(const Basis& basis, const std::vector<std::vector<std::int32_t>>& next,
                   std::int32_t start, const std::vector<bool>& accept) {
  Dfa d;
  d.letters = basis.letter_count();
  d.start = start;
  d.accepting = accept;
  d.trans.assign(next.size() * d.letters, -1);
  for (std::size_t s = 0; s < next.size(); ++s)
    for (Letter l = 0; l < d.letters; ++l)
      d.trans[s * d.letters + l] = next[s][l];
  return intersect(d, reduced_universe(basis));
}

}  // namespace arbor
