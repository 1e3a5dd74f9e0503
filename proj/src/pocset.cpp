#include "arbor/pocset.hpp"

#include <algorithm>

namespace arbor {

void Relation::transitive_close() {
  // Warshall over packed rows.
  for (ElemId k = 0; k < n_; ++k) {
    const std::size_t krow = std::size_t(k) * words_;
    for (ElemId i = 0; i < n_; ++i) {
      if (!get(i, k)) continue;
      const std::size_t irow = std::size_t(i) * words_;
      for (std::size_t w = 0; w < words_; ++w) bits_[irow + w] |= bits_[krow + w];
    }
  }
}

std::optional<ElemId> ActionFragment::apply(const std::string& gen, ElemId e) const {
  auto it = maps.find(gen);
  if (it == maps.end()) return std::nullopt;
  ElemId img = it->second[e];
  if (img < 0) return std::nullopt;
  return img;
}

std::optional<ElemId> ActionFragment::apply_inverse(const std::string& gen, ElemId e) const {
  auto it = maps.find(gen);
  if (it == maps.end()) return std::nullopt;
  const auto& m = it->second;
  for (ElemId x = 0; x < static_cast<ElemId>(m.size()); ++x)
    if (m[x] == e) return x;
  return std::nullopt;
}

std::optional<ElemId> ActionFragment::apply_word(const std::vector<std::string>& word,
                                                 ElemId e) const {
  // Leftmost letter acts last: word {g,h} means g.(h.e).
  ElemId cur = e;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::string& g = *it;
    std::optional<ElemId> next;
    if (!g.empty() && g.back() == '-')
      next = apply_inverse(g.substr(0, g.size() - 1), cur);
    else
      next = apply(g, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::vector<ElemId> Pocset::part_elements(std::int32_t part) const {
  std::vector<ElemId> out;
  for (ElemId e = 0; e < size(); ++e)
    if (part_of(e) == part) out.push_back(e);
  return out;
}

namespace {

std::vector<std::string> witness(const Pocset& p, std::initializer_list<ElemId> es) {
  std::vector<std::string> w;
  for (ElemId e : es) w.push_back(p.name(e));
  return w;
}

}  // namespace

ValidationReport validate_pocset(const Pocset& p, bool require_nested) {
  ValidationReport rep;
  const ElemId n = p.size();
  const auto& r = p.leq;

  bool refl_ok = true;
  for (ElemId a = 0; a < n && refl_ok; ++a)
    if (!r.get(a, a)) {
      rep.add("reflexivity", witness(p, {a}));
      refl_ok = false;
    }

  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (!r.get(a, b)) continue;
      if (a != b && r.get(b, a)) {
        if (a < b) rep.add("antisymmetry", witness(p, {a, b}));
        continue;
      }
      if (!r.get(star(b), star(a)))
        rep.add("order-reversal", witness(p, {a, b}),
                p.name(star(b)) + " <= " + p.name(star(a)) + " missing");
      if (r.get(a, star(b)))
        rep.add("condition4", witness(p, {a, b}),
                "both " + p.name(a) + " <= " + p.name(b) + " and " + p.name(a) +
                    " <= " + p.name(star(b)));
    }
  }

  // transitivity
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      if (a == b || !r.get(a, b)) continue;
      for (ElemId c = 0; c < n; ++c)
        if (b != c && r.get(b, c) && !r.get(a, c)) {
          rep.add("transitivity", witness(p, {a, b, c}));
          goto next_a;  // one minimal witness per axiom instance is plenty
        }
    }
  next_a:;

  if (require_nested) {
    for (ElemId a = 0; a < n; a += 2)
      for (ElemId b = a + 2; b < n; b += 2)
        if (!p.comparable(a, b)) {
          rep.add("condition3", witness(p, {a, b}), "no relation in any of the four ways");
        }
  }

  // parts: every pair assigned, indices in range
  for (std::size_t q = 0; q < p.part_of_pair.size(); ++q)
    if (p.part_of_pair[q] < 0 ||
        p.part_of_pair[q] >= static_cast<std::int32_t>(p.part_names.size()))
      rep.add("parts", {p.elements.base_name(static_cast<std::int32_t>(q))},
              "pair not assigned to a part");

  // action: star-equivariance, order preservation, part preservation
  for (const auto& [gen, m] : p.action.maps) {
    if (m.size() != std::size_t(n)) {
      rep.add("action-shape", {gen});
      continue;
    }
    for (ElemId a = 0; a < n; ++a) {
      if (m[a] < 0) continue;
      if (m[star(a)] >= 0 && m[star(a)] != star(m[a]))
        rep.add("action-star", {gen, p.name(a)});
      if (p.part_of(m[a]) != p.part_of(a))
        rep.add("action-parts", {gen, p.name(a)});
      for (ElemId b = 0; b < n; ++b) {
        if (m[b] < 0 || !r.get(a, b)) continue;
        if (!r.get(m[a], m[b]))
          rep.add("action-order", {gen, p.name(a), p.name(b)},
                  "image pair " + p.name(m[a]) + ", " + p.name(m[b]) + " unrelated");
      }
      for (ElemId b = a + 1; b < n; ++b)
        if (m[b] == m[a]) rep.add("action-injective", {gen, p.name(a), p.name(b)});
    }
  }

  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const Violation& x, const Violation& y) {
              if (x.axiom != y.axiom) return x.axiom < y.axiom;
              return x.witness < y.witness;
            });
  return rep;
}

Pocset derive_order_from_corners(const CornerTable& t,
                                 const std::vector<std::string>& part_names,
                                 const std::vector<std::int32_t>& part_of_pair,
                                 ActionFragment action) {
  Pocset p;
  p.elements = t.elements();
  const ElemId n = p.elements.size();
  p.leq = Relation(n);
  p.incl = Relation(n);
  p.action = std::move(action);

  if (part_names.empty()) {
    p.part_names = {"all"};
    p.part_of_pair.assign(p.elements.pair_count(), 0);
  } else {
    p.part_names = part_names;
    p.part_of_pair = part_of_pair;
  }

  for (ElemId a = 0; a < n; ++a) {
    p.leq.set(a, a);
    p.incl.set(a, a);
  }

  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (pair_of(a) == pair_of(b)) continue;
      auto cs = t.corners(a, b);
      // cs = [a n b, a n b*, a* n b, a* n b*]; a <= b looks at a n b*.
      if (cs[1] == CornerStatus::Empty) {
        p.leq.set(a, b);
        p.incl.set(a, b);
        continue;
      }
      if (cs[1] == CornerStatus::SmallNonempty) {
        int smalls = 0;
        for (CornerStatus s : cs) smalls += is_small(s);
        if (smalls == 1) {
          p.leq.set(a, b);
        } else {
          int empties = 0;
          for (CornerStatus s : cs) empties += (s == CornerStatus::Empty);
          if (empties == 0)
            throw OrderDeriveError("good position violated at (" + p.name(a) +
                                   ", " + p.name(b) + ")");
          // two small corners with one empty: the empty corner wins, this
          // small corner contributes no relation
        }
      }
    }
  }

  p.leq.transitive_close();
  p.incl.transitive_close();

  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      if (a != b && p.leq.get(a, b) && p.leq.get(b, a))
        throw OrderDeriveError("antisymmetry broken between " + p.name(a) +
                               " and " + p.name(b));
      if (p.leq.get(a, b) && p.leq.get(a, star(b)))
        throw OrderDeriveError("condition 4 broken at (" + p.name(a) + ", " +
                               p.name(b) + ")");
    }

  p.corners = t;
  return p;
}

const char* to_string(SandwichStatus s) {
  switch (s) {
    case SandwichStatus::Witnessed: return "witnessed";
    case SandwichStatus::CrossingEverywhere: return "crossing-everywhere-in-fragment";
    case SandwichStatus::Unknown: return "unknown-within-fragment";
  }
  return "?";
}

IntervalResult interval(const Pocset& p, ElemId a, ElemId b) {
  IntervalResult res;
  res.comparable = p.leq.get(a, b);
  if (res.comparable) {
    for (ElemId c = 0; c < p.size(); ++c)
      if (p.leq.get(a, c) && p.leq.get(c, b)) res.between.push_back(c);
  }

  const auto nparts = static_cast<std::int32_t>(p.part_names.size());
  for (std::int32_t j = 0; j < nparts; ++j) {
    // representative: canonically least plus element of the part
    ElemId rep = -1;
    for (ElemId e = 0; e < p.size(); e += 2)
      if (p.part_of(e) == j) {
        rep = e;
        break;
      }
    if (rep < 0) continue;
    for (std::int32_t k = 0; k < nparts; ++k) {
      if (k == j) continue;
      SandwichEntry entry{j, k, SandwichStatus::Unknown};
      bool lower = false, upper = false, all_cross = true;
      for (ElemId e = 0; e < p.size(); ++e) {
        if (p.part_of(e) != k) continue;
        if (p.leq.get(e, rep)) lower = true;
        if (p.leq.get(rep, e)) upper = true;
        if (p.comparable(rep, e)) all_cross = false;
      }
      if (lower && upper)
        entry.status = SandwichStatus::Witnessed;
      else if (all_cross)
        entry.status = SandwichStatus::CrossingEverywhere;
      res.sandwich.push_back(entry);
    }
  }
  return res;
}

bool crossing(const CornerTable& t, ElemId a, ElemId b) {
  if (pair_of(a) == pair_of(b))
    throw StructuralError("degenerate pair (" + t.elements().name(a) + ", " +
                          t.elements().name(b) + ")");
  return t.crossing(a, b);
}

}  // namespace arbor
