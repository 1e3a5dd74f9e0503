#include "arbor/word.hpp"

namespace arbor {

Basis::Basis(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty() || symbols_[i].back() == '-')
      throw StructuralError("bad basis symbol '" + symbols_[i] + "'");
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i] == symbols_[j])
        throw StructuralError("duplicate basis symbol " + symbols_[i]);
  }
}

Letter Basis::parse_letter(const std::string& tok) const {
  std::string base = tok;
  bool neg = false;
  if (!base.empty() && base.back() == '-') {
    neg = true;
    base.pop_back();
  }
  for (std::int32_t i = 0; i < rank(); ++i)
    if (symbols_[i] == base) return neg ? inv(2 * i) : 2 * i;
  throw StructuralError("unknown letter '" + tok + "'");
}

Word normalize_word(const std::vector<Letter>& raw) {
  Word w;
  for (Letter l : raw) {
    if (!w.letters.empty() && w.letters.back() == inv(l))
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return normalize_word(raw);
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(inv(*it));
  return out;
}

Word parse_word(const Basis& basis, const std::string& text) {
  std::vector<Letter> raw;
  std::string cur;
  for (char c : text + " ") {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) raw.push_back(basis.parse_letter(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return normalize_word(raw);
}

std::string word_to_string(const Basis& basis, const Word& w) {
  std::string out;
  for (Letter l : w.letters) {
    if (!out.empty()) out += ' ';
    out += basis.letter_name(l);
  }
  return out;
}

std::vector<Word> ball(const Basis& basis, std::int32_t radius) {
  std::vector<Word> out{{}};
  std::size_t level_begin = 0;
  for (std::int32_t r = 0; r < radius; ++r) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter l = 0; l < basis.letter_count(); ++l) {
        if (!out[i].letters.empty() && out[i].letters.back() == inv(l)) continue;
        Word w = out[i];
        w.letters.push_back(l);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

Word Automorphism::apply(const Word& w) const {
  std::vector<Letter> raw;
  for (Letter l : w.letters) {
    const Word& img = images[basis_of(l)];
    if (positive(l))
      raw.insert(raw.end(), img.letters.begin(), img.letters.end());
    else {
      Word ii = inverse(img);
      raw.insert(raw.end(), ii.letters.begin(), ii.letters.end());
    }
  }
  return normalize_word(raw);
}

Word Automorphism::apply_inverse(const Word& w) const {
  std::vector<Letter> raw;
  for (Letter l : w.letters) {
    const Word& img = inverse_images[basis_of(l)];
    if (positive(l))
      raw.insert(raw.end(), img.letters.begin(), img.letters.end());
    else {
      Word ii = inverse(img);
      raw.insert(raw.end(), ii.letters.begin(), ii.letters.end());
    }
  }
  return normalize_word(raw);
}

Automorphism make_automorphism(const Basis& basis, std::vector<Word> images,
                               std::vector<Word> inverse_images) {
  if (images.size() != std::size_t(basis.rank()) ||
      inverse_images.size() != std::size_t(basis.rank()))
    throw StructuralError("automorphism needs one image per basis symbol");
  Automorphism phi{std::move(images), std::move(inverse_images)};
  for (std::int32_t i = 0; i < basis.rank(); ++i) {
    Word x{{2 * i}};
    if (phi.apply(phi.apply_inverse(x)) != x || phi.apply_inverse(phi.apply(x)) != x)
      throw StructuralError("automorphism images and inverse images do not compose to the identity on " +
                            basis.symbol(i));
  }
  return phi;
}

}  // namespace arbor
