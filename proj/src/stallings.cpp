#include "arbor/stallings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace arbor {

StallingsGraph::StallingsGraph(const Basis& basis, const std::vector<Word>& generators)
    : basis_(basis) {
  // petal per generator around a single base state; folding merges the rest
  std::int32_t nstates = 1;
  std::vector<std::array<std::int32_t, 3>> edges;  // (state, letter, target)
  base_ = 0;
  for (const Word& g : generators) {
    if (g.empty()) continue;
    std::int32_t cur = base_;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::int32_t nxt = i + 1 == g.size() ? base_ : nstates++;
      Letter l = g.letters[i];
      edges.push_back({cur, l, nxt});
      edges.push_back({nxt, inv(l), cur});
      cur = nxt;
    }
  }
  fold(nstates, edges);
}

void StallingsGraph::fold(std::int32_t nstates,
                          std::vector<std::array<std::int32_t, 3>> edges) {
  // Union-find folding: merge targets whenever a state reads one letter two
  // ways.
  const std::int32_t L = basis_.letter_count();

  std::vector<std::int32_t> up(nstates);
  std::iota(up.begin(), up.end(), 0);
  std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> seen;  // (state,letter) -> target
    for (const auto& [s, l, t] : edges) {
      auto rs = find(s), rt = find(t);
      auto key = std::pair{rs, l};
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, rt);
      } else if (find(it->second) != rt) {
        up[find(it->second)] = rt;
        changed = true;
      }
    }
  }

  // rebuild the table over representatives
  std::map<std::int32_t, std::int32_t> id;
  for (std::int32_t s = 0; s < nstates; ++s) id.try_emplace(find(s), 0);
  std::int32_t counter = 0;
  for (auto& [root, fresh] : id) fresh = counter++;
  std::vector<std::vector<std::int32_t>> folded(counter, std::vector<std::int32_t>(L, -1));
  for (const auto& [s, l, t] : edges) folded[id[find(s)]][l] = id[find(t)];
  base_ = id[find(base_)];
  next_ = std::move(folded);

  // core: prune non-base states of degree <= 1
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::int32_t s = 0; s < state_count(); ++s) {
      if (s == base_) continue;
      std::int32_t deg = 0;
      for (Letter l = 0; l < L; ++l) deg += (next_[s][l] >= 0);
      if (deg > 1 || deg == 0) continue;
      for (Letter l = 0; l < L; ++l) {
        if (next_[s][l] < 0) continue;
        next_[next_[s][l]][inv(l)] = -1;
        next_[s][l] = -1;
      }
      pruned = true;
    }
  }
  // drop orphaned states
  std::vector<std::int32_t> newid(state_count(), -1);
  std::int32_t keep = 0;
  for (std::int32_t s = 0; s < state_count(); ++s) {
    std::int32_t deg = 0;
    for (Letter l = 0; l < L; ++l) deg += (next_[s][l] >= 0);
    if (deg > 0 || s == base_) newid[s] = keep++;
  }
  std::vector<std::vector<std::int32_t>> compact(keep, std::vector<std::int32_t>(L, -1));
  for (std::int32_t s = 0; s < state_count(); ++s) {
    if (newid[s] < 0) continue;
    for (Letter l = 0; l < L; ++l)
      if (next_[s][l] >= 0) compact[newid[s]][l] = newid[next_[s][l]];
  }
  base_ = newid[base_];
  next_ = std::move(compact);
  tree_built_ = false;
}

bool StallingsGraph::contains(const Word& w) const {
  std::int32_t s = base_;
  for (Letter l : w.letters) {
    s = next_[s][l];
    if (s < 0) return false;
  }
  return s == base_;
}

Dfa StallingsGraph::language() const {
  std::vector<bool> accept(state_count(), false);
  accept[base_] = true;
  return graph_language(basis_, next_, base_, accept);
}

void StallingsGraph::ensure_tree() const {
  if (tree_built_) return;
  tree_parent_.assign(state_count(), -1);
  tree_letter_.assign(state_count(), -1);
  nontree_.clear();
  std::vector<bool> seen(state_count(), false);
  std::queue<std::int32_t> q;
  q.push(base_);
  seen[base_] = true;
  std::vector<bool> edge_in_tree(state_count() * std::size_t(basis_.letter_count()), false);
  auto eidx = [&](std::int32_t s, Letter l) {
    return std::size_t(s) * basis_.letter_count() + l;
  };
  while (!q.empty()) {
    auto s = q.front();
    q.pop();
    for (Letter l = 0; l < basis_.letter_count(); ++l) {
      auto t = next_[s][l];
      if (t < 0) continue;
      if (!seen[t]) {
        seen[t] = true;
        tree_parent_[t] = s;
        tree_letter_[t] = l;
        edge_in_tree[eidx(s, l)] = true;
        edge_in_tree[eidx(t, inv(l))] = true;
        q.push(t);
      }
    }
  }
  for (std::int32_t s = 0; s < state_count(); ++s)
    for (Letter l = 0; l < basis_.letter_count(); ++l) {
      auto t = next_[s][l];
      if (t < 0 || edge_in_tree[eidx(s, l)]) continue;
      // record each undirected non-tree edge once, positive-letter direction
      if (positive(l)) nontree_.push_back({s, l});
    }
  std::sort(nontree_.begin(), nontree_.end());
  tree_built_ = true;
}

namespace {

Word path_from_base(const std::vector<std::int32_t>& parent, const std::vector<Letter>& letter,
                    std::int32_t s) {
  std::vector<Letter> rev;
  while (parent[s] >= 0) {
    rev.push_back(letter[s]);
    s = parent[s];
  }
  std::reverse(rev.begin(), rev.end());
  return normalize_word(rev);
}

}  // namespace

std::vector<Word> StallingsGraph::subgroup_basis() const {
  ensure_tree();
  std::vector<Word> out;
  for (auto [s, l] : nontree_) {
    Word to_s = path_from_base(tree_parent_, tree_letter_, s);
    Word to_t = path_from_base(tree_parent_, tree_letter_, next_[s][l]);
    Word gen = concat(concat(to_s, Word{{l}}), inverse(to_t));
    out.push_back(gen);
  }
  return out;
}

std::optional<Word> StallingsGraph::rewrite(const Word& member) const {
  ensure_tree();
  std::map<std::pair<std::int32_t, Letter>, std::int32_t> gen_of;
  for (std::size_t i = 0; i < nontree_.size(); ++i)
    gen_of[nontree_[i]] = static_cast<std::int32_t>(i);

  std::vector<Letter> out;
  std::int32_t s = base_;
  for (Letter l : member.letters) {
    auto t = next_[s][l];
    if (t < 0) return std::nullopt;
    if (positive(l)) {
      auto it = gen_of.find({s, l});
      if (it != gen_of.end()) out.push_back(2 * it->second);
    } else {
      auto it = gen_of.find({t, inv(l)});
      if (it != gen_of.end()) out.push_back(inv(2 * it->second));
    }
    s = t;
  }
  if (s != base_) return std::nullopt;
  return normalize_word(out);
}

StallingsGraph intersect_subgroups(const StallingsGraph& h, const StallingsGraph& k) {
  // based product graph; folding is unnecessary (product of folded graphs is
  // deterministic) but harmless and also computes the core
  const Basis& basis = h.basis();
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> ids;
  std::vector<std::pair<std::int32_t, std::int32_t>> todo;
  std::vector<Word> petals;  // built directly below

  // build the reachable product as an explicit graph
  std::vector<std::vector<std::int32_t>> next;
  auto intern = [&](std::int32_t x, std::int32_t y) {
    auto [it, fresh] = ids.try_emplace(std::pair{x, y}, static_cast<std::int32_t>(ids.size()));
    if (fresh) {
      todo.push_back({x, y});
      next.push_back(std::vector<std::int32_t>(basis.letter_count(), -1));
    }
    return it->second;
  };
  intern(h.base(), k.base());
  for (std::size_t i = 0; i < todo.size(); ++i) {
    auto [x, y] = todo[i];
    auto sid = ids.at({x, y});
    for (Letter l = 0; l < basis.letter_count(); ++l) {
      auto tx = h.next(x, l), ty = k.next(y, l);
      if (tx < 0 || ty < 0) continue;
      next[sid][l] = intern(tx, ty);
    }
  }

  // extract a generating set via spanning tree of the product, then rebuild
  // a StallingsGraph from words so the core invariant is restored
  std::vector<std::int32_t> parent(ids.size(), -1);
  std::vector<Letter> letter(ids.size(), -1);
  std::vector<bool> seen(ids.size(), false);
  std::queue<std::int32_t> q;
  q.push(0);
  seen[0] = true;
  std::vector<std::pair<std::int32_t, Letter>> nontree;
  std::vector<bool> in_tree(ids.size() * std::size_t(basis.letter_count()), false);
  auto eidx = [&](std::int32_t s, Letter l) {
    return std::size_t(s) * basis.letter_count() + l;
  };
  while (!q.empty()) {
    auto s = q.front();
    q.pop();
    for (Letter l = 0; l < basis.letter_count(); ++l) {
      auto t = next[s][l];
      if (t < 0) continue;
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        letter[t] = l;
        in_tree[eidx(s, l)] = true;
        in_tree[eidx(t, inv(l))] = true;
        q.push(t);
      }
    }
  }
  for (std::size_t s = 0; s < ids.size(); ++s)
    for (Letter l = 0; l < basis.letter_count(); ++l) {
      auto t = next[s][l];
      if (t < 0 || !seen[s] || in_tree[eidx(static_cast<std::int32_t>(s), l)] || !positive(l))
        continue;
      Word to_s = path_from_base(parent, letter, static_cast<std::int32_t>(s));
      Word to_t = path_from_base(parent, letter, t);
      petals.push_back(concat(concat(to_s, Word{{l}}), inverse(to_t)));
    }
  return StallingsGraph(basis, petals);
}

std::optional<std::int64_t> subgroup_index(const StallingsGraph& h,
                                           const std::vector<Word>& u_generators) {
  // rewrite U's generators in H's free basis, fold over that alphabet, and
  // test the covering criterion: finite index iff the folded core graph is
  // complete over the H-basis alphabet
  auto hbasis_words = h.subgroup_basis();
  const auto rank = static_cast<std::int32_t>(hbasis_words.size());

  std::vector<Word> rewritten;
  for (const Word& g : u_generators) {
    auto r = h.rewrite(g);
    if (!r) throw StructuralError("generator is not a member of the subgroup");
    rewritten.push_back(*r);
  }
  if (rank == 0) return 1;  // H trivial forces U trivial

  std::vector<std::string> names;
  for (std::int32_t i = 0; i < rank; ++i) names.push_back("h" + std::to_string(i));
  Basis hb(names);
  StallingsGraph u(hb, rewritten);
  for (std::int32_t s = 0; s < u.state_count(); ++s)
    for (Letter l = 0; l < hb.letter_count(); ++l)
      if (u.next(s, l) < 0) return std::nullopt;
  return u.state_count();
}

CommensurabilityReport commensurable(const StallingsGraph& h, const StallingsGraph& k) {
  StallingsGraph inter = intersect_subgroups(h, k);
  auto gens = inter.subgroup_basis();
  CommensurabilityReport rep;
  rep.index_in_h = subgroup_index(h, gens);
  rep.index_in_k = subgroup_index(k, gens);
  rep.commensurable = rep.index_in_h.has_value() && rep.index_in_k.has_value();
  return rep;
}

}  // namespace arbor
