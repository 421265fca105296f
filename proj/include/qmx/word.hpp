#ifndef QMX_WORD_HPP
#define QMX_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qmx {

enum class Kind : std::uint8_t { T, DT, U, E, F, K, Kinv };

/// Indexed generator. For T/DT, i is the Latin index a (1..n) and j the
/// Greek index alpha (1..m); for E/F/K/Kinv only i is used; for U both i, j
/// are matrix-coefficient indices in 1..N.
struct GenId {
  Kind kind{};
  std::uint8_t i{};
  std::uint8_t j{};

  friend bool operator==(const GenId&, const GenId&) = default;
};

/// Letter order: t's below dt's (form grading first), each block sorted by
/// (alpha, a); other kinds follow in a fixed block order.
inline std::uint32_t letter_key(const GenId& g) {
  std::uint32_t group = 0;
  std::uint32_t hi = 0, lo = 0;
  switch (g.kind) {
    case Kind::T: group = 0; hi = g.j; lo = g.i; break;
    case Kind::DT: group = 1; hi = g.j; lo = g.i; break;
    case Kind::U: group = 2; hi = g.i; lo = g.j; break;
    case Kind::E: group = 3; hi = g.i; lo = 0; break;
    case Kind::F: group = 4; hi = g.i; lo = 0; break;
    case Kind::K: group = 5; hi = g.i; lo = 0; break;
    case Kind::Kinv: group = 6; hi = g.i; lo = 0; break;
  }
  return (group << 16) | (hi << 8) | lo;
}

inline bool letter_less(const GenId& a, const GenId& b) { return letter_key(a) < letter_key(b); }

struct Word {
  std::vector<GenId> g;

  Word() = default;
  explicit Word(std::vector<GenId> letters) : g(std::move(letters)) {}
  static Word single(GenId x) { return Word({x}); }

  size_t size() const { return g.size(); }
  bool empty() const { return g.empty(); }
  const GenId& operator[](size_t k) const { return g[k]; }

  Word concat(const Word& o) const {
    Word r(*this);
    r.g.insert(r.g.end(), o.g.begin(), o.g.end());
    return r;
  }
  Word prefix(size_t len) const { return Word({g.begin(), g.begin() + len}); }
  Word suffix(size_t from) const { return Word({g.begin() + from, g.end()}); }
  Word append(GenId x) const {
    Word r(*this);
    r.g.push_back(x);
    return r;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

/// Degree-lexicographic word order: total length first, then letterwise.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t k = 0; k < a.size(); ++k) {
    std::uint32_t ka = letter_key(a[k]), kb = letter_key(b[k]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (const auto& x : w.g) {
      h = (h ^ letter_key(x)) * 1099511628211ull;
    }
    return h;
  }
};

inline GenId gen_t(int a, int alpha) {
  return GenId{Kind::T, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(alpha)};
}
inline GenId gen_dt(int a, int alpha) {
  return GenId{Kind::DT, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(alpha)};
}
inline GenId gen_u(int i, int j) {
  return GenId{Kind::U, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline GenId gen_E(int i) { return GenId{Kind::E, static_cast<std::uint8_t>(i), 0}; }
inline GenId gen_F(int i) { return GenId{Kind::F, static_cast<std::uint8_t>(i), 0}; }
inline GenId gen_K(int i) { return GenId{Kind::K, static_cast<std::uint8_t>(i), 0}; }
inline GenId gen_Kinv(int i) { return GenId{Kind::Kinv, static_cast<std::uint8_t>(i), 0}; }

std::string atom_str(const GenId& g);
std::string word_str(const Word& w);  // "t[1,1] dt[2,1]^2"; "1" for the empty word

/// Number of DT letters (form degree of the monomial).
inline int form_degree(const Word& w) {
  int k = 0;
  for (const auto& x : w.g)
    if (x.kind == Kind::DT) ++k;
  return k;
}

/// Number of T letters (polynomial degree of the monomial).
inline int poly_degree(const Word& w) {
  int k = 0;
  for (const auto& x : w.g)
    if (x.kind == Kind::T) ++k;
  return k;
}

}  // namespace qmx

#endif
