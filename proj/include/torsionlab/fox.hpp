#ifndef TORSIONLAB_FOX_HPP
#define TORSIONLAB_FOX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/errors.hpp"

namespace torsionlab {

// A letter of a free group word: generator index plus inversion flag.
using Lit = std::pair<std::size_t, bool>;
using Word = std::vector<Lit>;

inline Lit lit(std::size_t letter, bool inverse = false) { return {letter, inverse}; }

inline Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, !it->second);
  return out;
}

inline Word free_reduce(const Word& w) {
  Word out;
  for (const Lit& l : w) {
    if (!out.empty() && out.back().first == l.first && out.back().second != l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

// Formal integer combination of free-group words, always stored reduced.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement one() {
    GroupRingElement e;
    e.terms_[Word{}] = 1;
    return e;
  }
  static GroupRingElement of(const Word& w, long coeff = 1) {
    GroupRingElement e;
    if (coeff != 0) e.terms_[free_reduce(w)] = coeff;
    return e;
  }

  const std::map<Word, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, long coeff) {
    if (coeff == 0) return;
    Word r = free_reduce(w);
    auto it = terms_.find(r);
    if (it == terms_.end()) {
      terms_[std::move(r)] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add(word_concat(wa, wb), ca * cb);
    return out;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Word, long> terms_;
};

// Free differential calculus: d(uv)/dx = du/dx + u dv/dx, dx/dx = 1,
// d(x^-1)/dx = -x^-1, dy/dx = 0 for other letters.
inline GroupRingElement fox_derivative(const Word& word, std::size_t letter,
                                       std::size_t alphabet_size) {
  if (letter >= alphabet_size)
    throw DomainError("letter index " + std::to_string(letter) + " outside the alphabet");
  GroupRingElement out;
  Word prefix;
  for (const Lit& l : word) {
    if (l.first >= alphabet_size)
      throw DomainError("word uses letter index " + std::to_string(l.first) +
                        " outside the alphabet");
    if (l.first == letter) {
      if (!l.second) {
        out.add(prefix, 1);
      } else {
        Word p = prefix;
        p.push_back(l);
        out.add(p, -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

inline std::string word_to_string(const Word& w,
                                  const std::vector<std::string>& letter_names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Lit& l : w) {
    out += letter_names.at(l.first);
    if (l.second) out += "^-1";
    out += " ";
  }
  out.pop_back();
  return out;
}

}  // namespace torsionlab

#endif  // TORSIONLAB_FOX_HPP
