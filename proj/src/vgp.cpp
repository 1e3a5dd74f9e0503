#include "arbor/vgp.hpp"

#include <algorithm>

namespace arbor {

const char* to_string(Observed s) {
  switch (s) {
    case Observed::Empty: return "empty";
    case Observed::Nonempty: return "nonempty";
    case Observed::Undecided: return "undecided";
  }
  return "?";
}

namespace {

std::vector<std::string> inverse_word(const std::vector<std::string>& w) {
  std::vector<std::string> inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!it->empty() && it->back() == '-')
      inv.push_back(it->substr(0, it->size() - 1));
    else
      inv.push_back(*it + "-");
  }
  return inv;
}

}  // namespace

VgpResult reposition_vgp(const Pocset& p, const Ultrafilter& w,
                         std::vector<std::vector<std::string>> ball) {
  if (w.mode != OrderMode::AlmostInclusion)
    throw StructuralError("repositioning needs an almost-inclusion ultrafilter");
  if (std::find(ball.begin(), ball.end(), std::vector<std::string>{}) == ball.end())
    ball.insert(ball.begin(), {});

  VgpResult res;
  res.ball = ball;
  const ElemId n = p.size();
  res.membership.assign(n, std::vector<std::uint8_t>(ball.size(), 2));

  for (ElemId e = 0; e < n; ++e) {
    for (std::size_t i = 0; i < ball.size(); ++i) {
      auto img = p.action.apply_word(inverse_word(ball[i]), e);
      if (!img) {
        ++res.undecided_count;
        continue;
      }
      res.membership[e][i] = w.contains(*img) ? 1 : 0;
    }
  }

  const std::int32_t npairs = p.elements.pair_count();
  res.corner_cells.assign(std::size_t(npairs) * (npairs - 1) / 2,
                          {Observed::Empty, Observed::Empty, Observed::Empty,
                           Observed::Empty});

  // membership rows exist for both signs and are complementary wherever the
  // action decides them, so a corner is read off the two signed rows directly
  auto observe = [&](ElemId a, ElemId b) {
    bool any_undecided = false;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      std::uint8_t ma = res.membership[a][i], mb = res.membership[b][i];
      if (ma == 2 || mb == 2) {
        any_undecided = true;
        continue;
      }
      if (ma == 1 && mb == 1) return Observed::Nonempty;
    }
    return any_undecided ? Observed::Undecided : Observed::Empty;
  };

  for (std::int32_t q = 0; q < npairs; ++q)
    for (std::int32_t r = q + 1; r < npairs; ++r) {
      auto& cell = res.corner_cells[CornerTable::slot(q, r, npairs)];
      ElemId a = plus_of_pair(q), b = plus_of_pair(r);
      cell = {observe(a, b), observe(a, star(b)), observe(star(a), b),
              observe(star(a), star(b))};
      bool has_empty = false, all_decided = true;
      for (Observed o : cell) {
        has_empty |= (o == Observed::Empty);
        all_decided &= (o != Observed::Undecided);
      }
      if (all_decided && !has_empty) res.nested_observed = false;
    }

  auto observed_corner = [&](ElemId a, ElemId b) {
    std::int32_t q = pair_of(a), r = pair_of(b);
    bool swapped = q > r;
    if (swapped) {
      std::swap(q, r);
      std::swap(a, b);
    }
    const auto& cell = res.corner_cells[CornerTable::slot(q, r, npairs)];
    return cell[(is_plus(a) ? 0 : 2) + (is_plus(b) ? 0 : 1)];
  };

  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      if (pair_of(a) == pair_of(b)) continue;
      Observed o = observed_corner(a, star(b));  // corner a' n b'^*
      if (p.leq.get(a, b)) {
        if (o == Observed::Nonempty)
          res.iso_violations.push_back({a, b});
        else if (o == Observed::Undecided)
          res.iso_unwitnessed.push_back({a, b});
      } else {
        if (o == Observed::Empty || o == Observed::Undecided)
          res.iso_unwitnessed.push_back({a, b});
      }
    }
  return res;
}

CornerTable primed_corner_table(const Pocset& p, const VgpResult& r) {
  if (r.undecided_count != 0)
    throw StructuralError("primed corner table requires a fully decided ball");
  std::vector<std::array<CornerStatus, 4>> cells;
  cells.reserve(r.corner_cells.size());
  for (const auto& cell : r.corner_cells) {
    std::array<CornerStatus, 4> c;
    for (int i = 0; i < 4; ++i) {
      if (cell[i] == Observed::Undecided)
        throw StructuralError("undecided corner in primed table");
      c[i] = cell[i] == Observed::Empty ? CornerStatus::Empty : CornerStatus::Large;
    }
    cells.push_back(c);
  }
  return CornerTable(p.elements, std::move(cells));
}

}  // namespace arbor
