#ifndef INVOP_WORD_HH
#define INVOP_WORD_HH

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invop/coeff_ring.hh"
#include "invop/format.hh"

namespace invop {

// Letters of the free algebras used throughout: the abstract Smith letters
// x, y, e (displayed X, Y, E at the Weyl level) plus the formal inverse of x
// available only in the localized Laurent model.
namespace letter {
inline constexpr std::uint8_t x = 0;
inline constexpr std::uint8_t y = 1;
inline constexpr std::uint8_t e = 2;
inline constexpr std::uint8_t x_inv = 3;
}  // namespace letter

using Word = std::vector<std::uint8_t>;

// Element of the free associative algebra on the letters above, with
// coefficients in R: a finite map word -> coefficient, no zero entries.
// The empty word is the unit.
template <CoeffRing R>
class FreeElt {
 public:
  using TermMap = std::map<Word, R>;

  FreeElt() = default;
  static FreeElt scalar(const R& c) {
    FreeElt f;
    f.add_term({}, c);
    return f;
  }
  static FreeElt single(Word w, const R& c) {
    FreeElt f;
    f.add_term(std::move(w), c);
    return f;
  }

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }

  void add_term(Word w, const R& c) {
    if (ring_is_zero(c)) return;
    auto [it, inserted] = t_.emplace(std::move(w), c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  FreeElt operator-() const {
    FreeElt r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }
  FreeElt& operator+=(const FreeElt& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  FreeElt& operator-=(const FreeElt& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend FreeElt operator+(FreeElt a, const FreeElt& b) { return a += b; }
  friend FreeElt operator-(FreeElt a, const FreeElt& b) { return a -= b; }
  // Noncommutative product: concatenation of words, bilinear.
  friend FreeElt operator*(const FreeElt& a, const FreeElt& b) {
    FreeElt r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(std::move(w), ca * cb);
      }
    return r;
  }
  FreeElt& operator*=(const FreeElt& o) { return *this = *this * o; }
  FreeElt scaled(const R& s) const {
    FreeElt r;
    for (const auto& [w, c] : t_) r.add_term(w, c * s);
    return r;
  }

  bool operator==(const FreeElt& o) const { return t_ == o.t_; }
  bool operator!=(const FreeElt& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names = {"x", "y", "e", "x^-1"}) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [w, c] : t_) {
      std::string body;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!body.empty()) body += "*";
        body += names.at(w[i]);
        if (j - i > 1) body += "^" + std::to_string(j - i);
        i = j;
      }
      if constexpr (std::is_same_v<R, Rational>) {
        parts.emplace_back(c, body);
      } else {
        std::string text = "(" + ring_str(c) + ")";
        parts.emplace_back(Rational(1), body.empty() ? text : text + "*" + body);
      }
    }
    return join_terms(parts);
  }

 private:
  TermMap t_;
};

using WordSum = FreeElt<Rational>;

}  // namespace invop

#endif
