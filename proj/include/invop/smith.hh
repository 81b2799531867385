#ifndef INVOP_SMITH_HH
#define INVOP_SMITH_HH

#include <array>
#include <optional>
#include <random>

#include "invop/unipoly.hh"
#include "invop/word.hh"

namespace invop {

// Presentation of S(A, f, n): generators x, y, e over the commutative
// coefficient ring A with relations
//   [e,x] = n x,   [e,y] = -n y,   [y,x] = f(e).
template <CoeffRing R>
struct SPresentation {
  UniPoly<R> f;
  int n;
  SPresentation(UniPoly<R> f_, int n_) : f(std::move(f_)), n(n_) {
    if (n < 1) throw usage_error("presentation needs n >= 1");
  }
  bool operator==(const SPresentation& o) const { return f == o.f && n == o.n; }
};

// Presentation of U(A, u, n): same e-relations with the quotient relations
//   x y = u(e),   y x = u(e + n).
template <CoeffRing R>
struct UPresentation {
  UniPoly<R> u;
  int n;
  UPresentation(UniPoly<R> u_, int n_) : u(std::move(u_)), n(n_) {
    if (n < 1) throw usage_error("presentation needs n >= 1");
  }
  bool operator==(const UPresentation& o) const { return u == o.u && n == o.n; }
};

// The unique u with u(t+n) - u(t) = f(t) and u(0) = 0 (the anti-difference;
// the additive constant is fixed so that u matches a Y that kills constants).
template <CoeffRing R>
UniPoly<R> u_from_f(const UniPoly<R>& f, int n) {
  if (n < 1) throw usage_error("anti-difference needs n >= 1");
  R ctx = f.context();
  UniPoly<R> u = UniPoly<R>::zero(ctx);
  UniPoly<R> rest = f;
  while (!rest.is_zero()) {
    int d = rest.degree();
    R lead = rest.leading();
    R c = lead * ring_scalar(ctx, Rational(1, static_cast<long>(d + 1) * n));
    UniPoly<R> step = UniPoly<R>::t_power(ctx, static_cast<unsigned>(d + 1)).scaled(c);
    u += step;
    rest -= step.shifted_q(Rational(n)) - step;
  }
  return u;
}

template <CoeffRing R>
UniPoly<R> f_from_u(const UniPoly<R>& u, int n) {
  if (n < 1) throw usage_error("difference needs n >= 1");
  return u.shifted_q(Rational(n)) - u;
}

// Normal form in S(A, f, n): sum of coeff * x^a y^b e^c over (a, b, c).
template <CoeffRing R>
class SNormalForm {
 public:
  using Key = std::array<int, 3>;  // (a, b, c)
  using TermMap = std::map<Key, R>;

  SNormalForm() = default;
  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  void add_term(const Key& k, const R& c) {
    if (ring_is_zero(c)) return;
    auto [it, inserted] = t_.emplace(k, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }
  bool operator==(const SNormalForm& o) const { return t_ == o.t_; }
  bool operator!=(const SNormalForm& o) const { return !(*this == o); }

  FreeElt<R> to_words() const {
    FreeElt<R> out;
    for (const auto& [k, c] : t_) {
      Word w;
      w.insert(w.end(), k[0], letter::x);
      w.insert(w.end(), k[1], letter::y);
      w.insert(w.end(), k[2], letter::e);
      out.add_term(std::move(w), c);
    }
    return out;
  }

  std::string str() const { return to_words().str({"x", "y", "e", ""}); }

 private:
  TermMap t_;
};

// Normal form in U(A, u, n): sum a_{k,l} y^l e^k (l >= 1) plus
// sum b_{m,r} x^m e^r (m >= 0). Pure e-polynomials live in the x part.
template <CoeffRing R>
class UNormalForm {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, R>;

  UNormalForm() = default;
  bool is_zero() const { return y_.empty() && x_.empty(); }
  const TermMap& y_terms() const { return y_; }  // (l, k): y^l e^k
  const TermMap& x_terms() const { return x_; }  // (m, r): x^m e^r

  void add_y_term(int l, int k, const R& c) {
    if (l < 1) throw usage_error("y-part exponent must be >= 1");
    add(y_, {l, k}, c);
  }
  void add_x_term(int m, int r, const R& c) { add(x_, {m, r}, c); }

  bool operator==(const UNormalForm& o) const { return y_ == o.y_ && x_ == o.x_; }
  bool operator!=(const UNormalForm& o) const { return !(*this == o); }

  FreeElt<R> to_words() const {
    FreeElt<R> out;
    for (const auto& [k, c] : y_) {
      Word w;
      w.insert(w.end(), k.first, letter::y);
      w.insert(w.end(), k.second, letter::e);
      out.add_term(std::move(w), c);
    }
    for (const auto& [k, c] : x_) {
      Word w;
      w.insert(w.end(), k.first, letter::x);
      w.insert(w.end(), k.second, letter::e);
      out.add_term(std::move(w), c);
    }
    return out;
  }

  std::string str(const std::vector<std::string>& names = {"x", "y", "e", ""}) const {
    std::vector<std::pair<Rational, std::string>> parts;
    auto emit = [&](const TermMap& tm, std::uint8_t gen) {
      for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
        Word w;
        w.insert(w.end(), it->first.first, gen);
        w.insert(w.end(), it->first.second, letter::e);
        FreeElt<R> one = FreeElt<R>::single(w, it->second);
        std::string text = one.str(names);
        parts.emplace_back(Rational(1), text);
      }
    };
    emit(y_, letter::y);
    emit(x_, letter::x);
    if (parts.empty()) return "0";
    std::string out = parts[0].second;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const std::string& piece = parts[i].second;
      if (!piece.empty() && piece[0] == '-')
        out += " - " + piece.substr(1);
      else
        out += " + " + piece;
    }
    return out;
  }

 private:
  static void add(TermMap& tm, const Key& k, const R& c) {
    if (ring_is_zero(c)) return;
    auto [it, inserted] = tm.emplace(k, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) tm.erase(it);
    }
  }
  TermMap y_;
  TermMap x_;
};

namespace detail {

enum class RewriteSystem { smith, u_quotient };

template <CoeffRing R>
struct RewriteRules {
  RewriteSystem system;
  const UniPoly<R>* f;        // smith: [y,x] = f(e)
  UniPoly<R> u;               // u_quotient: x y = u(e)
  UniPoly<R> u_shifted;       // u_quotient: y x = u(e + n)
  int n;
  R n_scalar;

  bool reducible(std::uint8_t a, std::uint8_t b) const {
    if (a == letter::e && (b == letter::x || b == letter::y)) return true;
    if (a == letter::y && b == letter::x) return true;
    if (system == RewriteSystem::u_quotient && a == letter::x && b == letter::y) return true;
    return false;
  }

  // Replacement words (with multipliers) for the pair at position i.
  std::vector<std::pair<Word, R>> expand(const Word& w, std::size_t i, const R& coeff) const {
    std::vector<std::pair<Word, R>> out;
    auto splice = [&](std::initializer_list<std::uint8_t> mid, const R& c) {
      Word word;
      word.reserve(w.size());
      word.insert(word.end(), w.begin(), w.begin() + i);
      word.insert(word.end(), mid.begin(), mid.end());
      word.insert(word.end(), w.begin() + i + 2, w.end());
      out.emplace_back(std::move(word), c);
    };
    auto splice_poly = [&](const UniPoly<R>& g) {
      for (int j = 0; j <= g.degree(); ++j) {
        R c = g.coeff(j);
        if (ring_is_zero(c)) continue;
        Word word;
        word.reserve(w.size() + j);
        word.insert(word.end(), w.begin(), w.begin() + i);
        word.insert(word.end(), j, letter::e);
        word.insert(word.end(), w.begin() + i + 2, w.end());
        out.emplace_back(std::move(word), coeff * c);
      }
    };
    const std::uint8_t a = w[i], b = w[i + 1];
    if (a == letter::e && b == letter::x) {
      splice({letter::x, letter::e}, coeff);
      splice({letter::x}, coeff * n_scalar);
    } else if (a == letter::e && b == letter::y) {
      splice({letter::y, letter::e}, coeff);
      splice({letter::y}, -(coeff * n_scalar));
    } else if (a == letter::y && b == letter::x) {
      if (system == RewriteSystem::smith) {
        splice({letter::x, letter::y}, coeff);
        splice_poly(*f);
      } else {
        splice_poly(u_shifted);
      }
    } else {  // x y in the quotient
      splice_poly(u);
    }
    return out;
  }

  // Weight for x and y making every rule strictly decrease (weight,
  // inversions): the e-polynomial splices need 2*W > deg.
  unsigned long letter_weight() const {
    long d = std::max({f ? f->degree() : 0, u.degree(), u_shifted.degree(), 0});
    return static_cast<unsigned long>(d) + 1;
  }
};

// Every rewrite strictly decreases (total weight, inversion count), so the
// worklist pops the maximal pending word first: each production then lands
// strictly below everything already popped, every distinct word is popped
// at most once, and like terms always merge before expansion. A seeded
// generator randomizes the pop and the position choice instead, which the
// confluence suite exploits.
template <CoeffRing R>
FreeElt<R> rewrite(const FreeElt<R>& input, const RewriteRules<R>& rules,
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  const unsigned long weight_xy = rules.letter_weight();
  auto measure = [&](const Word& w) {
    unsigned long weight = 0, inversions = 0, seen_y = 0, seen_e = 0;
    for (std::uint8_t l : w) {
      if (l == letter::e) {
        weight += 1;
        ++seen_e;
      } else {
        weight += weight_xy;
        if (l == letter::y) {
          inversions += seen_e;
          ++seen_y;
        } else {
          inversions += seen_e + seen_y;
        }
      }
    }
    return std::pair{weight, inversions};
  };

  using Key = std::tuple<unsigned long, unsigned long, Word>;
  std::map<Key, R, std::greater<Key>> pending;
  auto push = [&](Word w, const R& c) {
    if (ring_is_zero(c)) return;
    auto [weight, inversions] = measure(w);
    Key key{weight, inversions, std::move(w)};
    auto [it, inserted] = pending.emplace(std::move(key), c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) pending.erase(it);
    }
  };
  for (const auto& [w, c] : input.terms()) push(w, c);

  FreeElt<R> result;
  long fuel = 50'000'000;
  while (!pending.empty()) {
    auto it = pending.begin();
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      std::advance(it, pick(*rng));
    }
    Word w = std::get<2>(it->first);
    R c = it->second;
    pending.erase(it);

    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (rules.reducible(w[i], w[i + 1])) positions.push_back(i);

    if (positions.empty()) {
      result.add_term(std::move(w), c);
      continue;
    }
    std::size_t pos = positions.front();
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
      pos = positions[pick(*rng)];
    }
    for (auto& [word, coeff] : rules.expand(w, pos, c)) push(std::move(word), coeff);
    if (--fuel == 0) throw std::logic_error("rewriting did not terminate");
  }
  return result;
}

inline std::array<int, 3> count_xye(const Word& w) {
  std::array<int, 3> c{0, 0, 0};
  for (auto l : w) c[l] += 1;
  return c;
}

}  // namespace detail

// Normal form in S(A, f, n) via the confluent rules
//   e x -> x e + n x,  e y -> y e - n y,  y x -> x y + f(e).
template <CoeffRing R>
SNormalForm<R> s_normalize(const FreeElt<R>& elem, const SPresentation<R>& pres,
                           std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  R ctx = pres.f.context();
  detail::RewriteRules<R> rules{detail::RewriteSystem::smith,
                                &pres.f,
                                UniPoly<R>::zero(ctx),
                                UniPoly<R>::zero(ctx),
                                pres.n,
                                ring_scalar(ctx, Rational(pres.n))};
  FreeElt<R> flat = detail::rewrite(elem, rules, shuffle_seed);
  SNormalForm<R> nf;
  for (const auto& [w, c] : flat.terms()) nf.add_term(detail::count_xye(w), c);
  return nf;
}

// Normal form in U(A, u, n) via
//   e x -> x (e+n),  e y -> y (e-n),  x y -> u(e),  y x -> u(e+n).
template <CoeffRing R>
UNormalForm<R> u_normalize(const FreeElt<R>& elem, const UPresentation<R>& pres,
                           std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  R ctx = pres.u.context();
  detail::RewriteRules<R> rules{detail::RewriteSystem::u_quotient,
                                nullptr,
                                pres.u,
                                pres.u.shifted_q(Rational(pres.n)),
                                pres.n,
                                ring_scalar(ctx, Rational(pres.n))};
  FreeElt<R> flat = detail::rewrite(elem, rules, shuffle_seed);
  UNormalForm<R> nf;
  for (const auto& [w, c] : flat.terms()) {
    auto counts = detail::count_xye(w);
    if (counts[1] > 0)
      nf.add_y_term(counts[1], counts[2], c);
    else
      nf.add_x_term(counts[0], counts[2], c);
  }
  return nf;
}

template <CoeffRing R>
SNormalForm<R> s_mul(const SNormalForm<R>& a, const SNormalForm<R>& b,
                     const SPresentation<R>& pres) {
  return s_normalize(a.to_words() * b.to_words(), pres);
}

template <CoeffRing R>
UNormalForm<R> u_mul(const UNormalForm<R>& a, const UNormalForm<R>& b,
                     const UPresentation<R>& pres) {
  return u_normalize(a.to_words() * b.to_words(), pres);
}

// The Casimir element Omega = x y - u(e) with u = u_from_f(f, n); commutes
// with x, y and e in S(A, f, n).
template <CoeffRing R>
SNormalForm<R> casimir(const SPresentation<R>& pres) {
  UniPoly<R> u = u_from_f(pres.f, pres.n);
  SNormalForm<R> omega;
  omega.add_term({1, 1, 0}, ring_one(pres.f.context()));
  for (int j = 0; j <= u.degree(); ++j) omega.add_term({0, 0, j}, -u.coeff(j));
  return omega;
}

template <CoeffRing R>
bool is_central(const SNormalForm<R>& elem, const SPresentation<R>& pres) {
  FreeElt<R> words = elem.to_words();
  for (std::uint8_t g : {letter::x, letter::y, letter::e}) {
    FreeElt<R> gen = FreeElt<R>::single({g}, ring_one(pres.f.context()));
    if (!s_normalize(words * gen - gen * words, pres).is_zero()) return false;
  }
  return true;
}

template <CoeffRing R>
bool is_central(const UNormalForm<R>& elem, const UPresentation<R>& pres) {
  FreeElt<R> words = elem.to_words();
  for (std::uint8_t g : {letter::x, letter::y, letter::e}) {
    FreeElt<R> gen = FreeElt<R>::single({g}, ring_one(pres.u.context()));
    if (!u_normalize(words * gen - gen * words, pres).is_zero()) return false;
  }
  return true;
}

// The quotient morphism S(A, f, n) -> U(A, u, n) = S(A, f, n)/(Omega),
// x -> x, y -> y, e -> e. The pair must satisfy u(t+n) - u(t) = f(t).
template <CoeffRing R>
UNormalForm<R> project_s_to_u(const SNormalForm<R>& elem, const SPresentation<R>& s_pres,
                              const UPresentation<R>& u_pres) {
  if (s_pres.n != u_pres.n || f_from_u(u_pres.u, u_pres.n) != s_pres.f)
    throw usage_error("incompatible f/u pair: u(t+n) - u(t) != f(t)");
  return u_normalize(elem.to_words(), u_pres);
}

}  // namespace invop

#endif
