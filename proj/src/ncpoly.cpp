#include "qmx/ncpoly.hpp"

#include <sstream>

namespace qmx {

std::string atom_str(const GenId& g) {
  switch (g.kind) {
    case Kind::T:
      return "t[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Kind::DT:
      return "dt[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Kind::U:
      return "u[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Kind::E:
      return "E_" + std::to_string(g.i);
    case Kind::F:
      return "F_" + std::to_string(g.i);
    case Kind::K:
      return "K_" + std::to_string(g.i);
    case Kind::Kinv:
      return "Ki_" + std::to_string(g.i);
  }
  return "?";
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t k = 0;
  bool first = true;
  while (k < w.size()) {
    size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!first) os << " ";
    os << atom_str(w[k]);
    if (run > 1) os << "^" << run;
    k += run;
    first = false;
  }
  return os.str();
}

NCPoly NCPoly::monomial(Word w, QRat c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

void NCPoly::add_term(const Word& w, const QRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QRat NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRat() : it->second;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r(*this);
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r(*this);
  r -= o;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa.concat(wb), ca * cb);
  return r;
}

NCPoly NCPoly::scale(const QRat& c) const {
  if (c.is_zero()) return NCPoly();
  NCPoly r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) fail_internal("leading_word of zero polynomial");
  return terms_.rbegin()->first;
}

const QRat& NCPoly::leading_coeff() const {
  if (terms_.empty()) fail_internal("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

int NCPoly::max_length() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPoly::is_length_homogeneous() const {
  if (terms_.empty()) return true;
  size_t len = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_)
    if (w.size() != len) return false;
  return true;
}

NCPoly NCPoly::map_coeffs(const std::function<QRat(const QRat&)>& f) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    QRat a = c;
    bool neg = false;
    // Pull a leading minus out of constant or single-sign coefficients for
    // readable output; the parser accepts either form.
    if (a.num().lc() < 0) {
      neg = true;
      a = -a;
    }
    if (first) {
      if (neg) os << "- ";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << (a.is_one() ? std::string("1") : "(" + a.str() + ")");
    } else if (a.is_one()) {
      os << word_str(w);
    } else {
      os << "(" << a.str() << ") " << word_str(w);
    }
  }
  return os.str();
}

}  // namespace qmx
