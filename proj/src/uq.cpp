#include "qmx/uq.hpp"

#include <algorithm>
#include <random>

namespace qmx {

std::vector<GenId> uq_generators(int N) {
  std::vector<GenId> gens;
  for (int i = 1; i < N; ++i) gens.push_back(gen_E(i));
  for (int i = 1; i < N; ++i) gens.push_back(gen_F(i));
  for (int i = 1; i < N; ++i) gens.push_back(gen_K(i));
  for (int i = 1; i < N; ++i) gens.push_back(gen_Kinv(i));
  return gens;
}

std::vector<NCPoly> uq_relations(int N) {
  CartanMatrix A(N);
  std::vector<NCPoly> rels;
  auto mono = [](std::initializer_list<GenId> letters, QRat c = QRat(1)) {
    return NCPoly::monomial(Word(std::vector<GenId>(letters)), c);
  };
  QRat qm = QRat::q_power(1) - QRat::q_power(-1);  // q - q^-1

  for (int i = 1; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      rels.push_back(mono({gen_K(i), gen_K(j)}) - mono({gen_K(j), gen_K(i)}));
  for (int i = 1; i < N; ++i) {
    rels.push_back(mono({gen_K(i), gen_Kinv(i)}) - NCPoly::one());
    rels.push_back(mono({gen_Kinv(i), gen_K(i)}) - NCPoly::one());
  }
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j)
      rels.push_back(mono({gen_K(i), gen_E(j)}) -
                     mono({gen_E(j), gen_K(i)}, QRat::q_power(A.a(i, j))));
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j)
      rels.push_back(mono({gen_K(i), gen_F(j)}) -
                     mono({gen_F(j), gen_K(i)}, QRat::q_power(-A.a(i, j))));
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      NCPoly r = mono({gen_E(i), gen_F(j)}) - mono({gen_F(j), gen_E(i)});
      if (i == j) {
        r -= (mono({gen_K(i)}) - mono({gen_Kinv(i)})).scale(qm.inv());
      }
      rels.push_back(std::move(r));
    }
  QRat q2 = qnum(2);  // q + q^-1
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      if (!(i - j == 1 || j - i == 1)) continue;
      rels.push_back(mono({gen_E(i), gen_E(i), gen_E(j)}) -
                     mono({gen_E(i), gen_E(j), gen_E(i)}, q2) +
                     mono({gen_E(j), gen_E(i), gen_E(i)}));
    }
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      if (!(i - j == 1 || j - i == 1)) continue;
      rels.push_back(mono({gen_F(i), gen_F(i), gen_F(j)}) -
                     mono({gen_F(i), gen_F(j), gen_F(i)}, q2) +
                     mono({gen_F(j), gen_F(i), gen_F(i)}));
    }
  for (int i = 1; i < N; ++i)
    for (int j = i + 2; j < N; ++j) {
      rels.push_back(mono({gen_E(i), gen_E(j)}) - mono({gen_E(j), gen_E(i)}));
      rels.push_back(mono({gen_F(i), gen_F(j)}) - mono({gen_F(j), gen_F(i)}));
    }
  return rels;
}

Mat Mat::zero(int n) {
  Mat m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, QRat());
  return m;
}

Mat Mat::identity(int n) {
  Mat m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QRat(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r = zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const QRat& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const QRat& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(*this);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(*this);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] -= o.a[k];
  return r;
}

Mat Mat::scale(const QRat& c) const {
  Mat r(*this);
  for (auto& x : r.a) x *= c;
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

const Mat& Rep::mat(const GenId& g) const {
  auto it = mats.find(letter_key(g));
  if (it == mats.end()) fail_domain("generator missing from representation: " + atom_str(g));
  return it->second;
}

Mat Rep::eval_word(const Word& w) const {
  Mat r = Mat::identity(N);
  for (const GenId& g : w.g) r = r * mat(g);
  return r;
}

Mat Rep::eval_poly(const NCPoly& p) const {
  Mat r = Mat::zero(N);
  for (const auto& [w, c] : p.terms()) r = r + eval_word(w).scale(c);
  return r;
}

Rep natural_rep(int N) {
  if (N < 2) fail_domain("natural_rep requires N >= 2");
  Rep rep;
  rep.N = N;
  for (int i = 1; i < N; ++i) {
    Mat e = Mat::zero(N), f = Mat::zero(N), k = Mat::identity(N), ki = Mat::identity(N);
    e.at(i - 1, i) = QRat(1);
    f.at(i, i - 1) = QRat(1);
    k.at(i - 1, i - 1) = QRat::q_power(1);
    k.at(i, i) = QRat::q_power(-1);
    ki.at(i - 1, i - 1) = QRat::q_power(-1);
    ki.at(i, i) = QRat::q_power(1);
    rep.mats.emplace(letter_key(gen_E(i)), std::move(e));
    rep.mats.emplace(letter_key(gen_F(i)), std::move(f));
    rep.mats.emplace(letter_key(gen_K(i)), std::move(k));
    rep.mats.emplace(letter_key(gen_Kinv(i)), std::move(ki));
  }
  for (int i = 1; i < N; ++i) {
    if (!(rep.mat(gen_K(i)) * rep.mat(gen_Kinv(i)) == Mat::identity(N)))
      fail_internal("natural_rep: K and K^-1 matrices are not mutually inverse");
  }
  for (const NCPoly& rel : uq_relations(N)) {
    if (!rep.eval_poly(rel).is_zero())
      fail_internal("natural_rep does not annihilate relation " + rel.str());
  }
  return rep;
}

void TensorPoly::add_term(const std::vector<Word>& legs, const QRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(legs);
  if (it == terms_.end()) {
    terms_.emplace(legs, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly coproduct(const Word& w, int k) {
  if (k < 1) fail_domain("coproduct requires k >= 1");
  TensorPoly acc(k);
  acc.add_term(std::vector<Word>(static_cast<size_t>(k)), QRat(1));
  for (const GenId& g : w.g) {
    TensorPoly next(k);
    // Letter coproducts have unit coefficients throughout.
    std::vector<std::vector<GenId>> letter_terms;  // per term: letter appended to each leg (or none)
    const GenId none{Kind::T, 0, 0};               // sentinel, never a real U_q letter
    switch (g.kind) {
      case Kind::K:
      case Kind::Kinv:
        letter_terms.push_back(std::vector<GenId>(static_cast<size_t>(k), g));
        break;
      case Kind::E:
        for (int p = 0; p < k; ++p) {
          std::vector<GenId> t(static_cast<size_t>(k), none);
          for (int s = 0; s < p; ++s) t[s] = gen_K(g.i);
          t[p] = g;
          letter_terms.push_back(std::move(t));
        }
        break;
      case Kind::F:
        for (int p = 0; p < k; ++p) {
          std::vector<GenId> t(static_cast<size_t>(k), none);
          t[p] = g;
          for (int s = p + 1; s < k; ++s) t[s] = gen_Kinv(g.i);
          letter_terms.push_back(std::move(t));
        }
        break;
      default:
        fail_domain("coproduct is defined on U_q generators only: " + atom_str(g));
    }
    for (const auto& [legs, c] : acc.terms()) {
      for (const auto& t : letter_terms) {
        std::vector<Word> nl = legs;
        for (int s = 0; s < k; ++s) {
          if (!(t[s] == none)) nl[s].g.push_back(t[s]);
        }
        next.add_term(nl, c);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

Word cancel_k_pairs(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      const GenId& a = w[p];
      const GenId& b = w[p + 1];
      bool cancel = (a.kind == Kind::K && b.kind == Kind::Kinv && a.i == b.i) ||
                    (a.kind == Kind::Kinv && b.kind == Kind::K && a.i == b.i);
      if (cancel) {
        w.g.erase(w.g.begin() + p, w.g.begin() + p + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

NCPoly antipode(const Word& w) {
  Word out;
  int sign = 1;
  for (size_t k = w.size(); k-- > 0;) {
    const GenId& g = w[k];
    switch (g.kind) {
      case Kind::E:  // S(E_i) = -K_i^-1 E_i
        sign = -sign;
        out.g.push_back(gen_Kinv(g.i));
        out.g.push_back(g);
        break;
      case Kind::F:  // S(F_i) = -F_i K_i
        sign = -sign;
        out.g.push_back(g);
        out.g.push_back(gen_K(g.i));
        break;
      case Kind::K:
        out.g.push_back(gen_Kinv(g.i));
        break;
      case Kind::Kinv:
        out.g.push_back(gen_K(g.i));
        break;
      default:
        fail_domain("antipode is defined on U_q generators only: " + atom_str(g));
    }
  }
  return NCPoly::monomial(cancel_k_pairs(std::move(out)), QRat(sign));
}

QRat counit(const Word& w) {
  for (const GenId& g : w.g) {
    if (g.kind == Kind::E || g.kind == Kind::F) return QRat();
    if (g.kind != Kind::K && g.kind != Kind::Kinv)
      fail_domain("counit is defined on U_q generators only: " + atom_str(g));
  }
  return QRat(1);
}

PairState apply_letter(const PairState& v, const GenId& letter, int N) {
  PairState out;
  auto add = [&](const MultiIdx& idx, const QRat& c) {
    if (c.is_zero()) return;
    auto it = out.find(idx);
    if (it == out.end()) {
      out.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  auto k_weight = [&](int slot_val, int i, bool inverse) -> QRat {
    if (slot_val == i) return QRat::q_power(inverse ? -1 : 1);
    if (slot_val == i + 1) return QRat::q_power(inverse ? 1 : -1);
    return QRat(1);
  };
  for (const auto& [idx, c] : v) {
    int k = static_cast<int>(idx.size());
    switch (letter.kind) {
      case Kind::K:
      case Kind::Kinv: {
        QRat w = c;
        for (int s = 0; s < k; ++s) w *= k_weight(idx[s], letter.i, letter.kind == Kind::Kinv);
        add(idx, w);
        break;
      }
      case Kind::E: {
        // sum_p K^(p-1 legs) (x) E (x) 1...: slot p jumps i -> i+1.
        QRat prefix = c;
        for (int p = 0; p < k; ++p) {
          if (idx[p] == letter.i && letter.i + 1 <= N) {
            MultiIdx y = idx;
            y[p] = static_cast<std::uint8_t>(letter.i + 1);
            add(y, prefix);
          }
          prefix *= k_weight(idx[p], letter.i, false);
        }
        break;
      }
      case Kind::F: {
        // sum_p 1... (x) F (x) K^-1 legs: slot p jumps i+1 -> i.
        std::vector<QRat> suffix(static_cast<size_t>(k) + 1, QRat(1));
        for (int s = k - 1; s >= 0; --s)
          suffix[s] = suffix[s + 1] * k_weight(idx[s], letter.i, true);
        for (int p = 0; p < k; ++p) {
          if (idx[p] == letter.i + 1) {
            MultiIdx y = idx;
            y[p] = static_cast<std::uint8_t>(letter.i);
            add(y, c * suffix[p + 1]);
          }
        }
        break;
      }
      default:
        fail_domain("pairing transport needs a U_q letter: " + atom_str(letter));
    }
  }
  return out;
}

PairState transport(const MultiIdx& start, const Word& w, int N) {
  PairState v;
  v.emplace(start, QRat(1));
  for (const GenId& g : w.g) v = apply_letter(v, g, N);
  return v;
}

int UqGrading::deg(const GenId& g) const {
  if (g.kind == Kind::E) return g.i == m ? 1 : 0;
  if (g.kind == Kind::F) return g.i == m ? deg_Fm : 0;
  if (g.kind == Kind::K || g.kind == Kind::Kinv) return 0;
  fail_domain("UqGrading applies to U_q letters only");
}

int UqGrading::word_degree(const Word& w) const {
  int d = 0;
  for (const GenId& g : w.g) d += deg(g);
  return d;
}

bool relation_homogeneous(const NCPoly& rel, const UqGrading& grading) {
  if (rel.is_zero()) return true;
  int d = grading.word_degree(rel.terms().begin()->first);
  for (const auto& [w, c] : rel.terms())
    if (grading.word_degree(w) != d) return false;
  return true;
}

Report verify_hopf_in_rep(int N, int kmax) {
  Report rep;
  rep.suite = "hopf";
  rep.param("N", std::to_string(N));
  rep.param("kmax", std::to_string(kmax));

  Rep pi = natural_rep(N);
  std::vector<NCPoly> rels = uq_relations(N);

  // (i) relations vanish under pi^{tensor k} after the iterated coproduct.
  for (int k = 1; k <= kmax; ++k) {
    bool ok = true;
    std::string witness;
    for (const NCPoly& r : rels) {
      std::vector<MultiIdx> starts;
      MultiIdx cur(static_cast<size_t>(k), 1);
      while (true) {
        starts.push_back(cur);
        int p = k - 1;
        while (p >= 0 && cur[p] == N) {
          cur[p] = 1;
          --p;
        }
        if (p < 0) break;
        ++cur[p];
      }
      for (const MultiIdx& s : starts) {
        PairState acc;
        for (const auto& [w, c] : r.terms()) {
          for (const auto& [idx, v] : transport(s, w, N)) {
            auto it = acc.find(idx);
            if (it == acc.end())
              acc.emplace(idx, v * c);
            else {
              it->second += v * c;
              if (it->second.is_zero()) acc.erase(it);
            }
          }
        }
        if (!acc.empty()) {
          ok = false;
          witness = r.str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("relations vanish at k=" + std::to_string(k), ok, witness);
  }

  // (ii) antipode axiom in pi: sum pi(S(w1)) pi(w2) = eps(w) I.
  {
    std::vector<Word> words;
    for (const GenId& g : uq_generators(N)) words.push_back(Word::single(g));
    std::mt19937 rng(12345);
    std::vector<GenId> alpha = uq_generators(N);
    for (int t = 0; t < 24; ++t) {
      int len = 2 + static_cast<int>(rng() % 2);
      Word w;
      for (int s = 0; s < len; ++s) w.g.push_back(alpha[rng() % alpha.size()]);
      words.push_back(w);
    }
    bool ok = true;
    std::string witness;
    for (const Word& w : words) {
      Mat acc = Mat::zero(N);
      TensorPoly cp = coproduct(w, 2);
      for (const auto& [legs, c] : cp.terms()) {
        acc = acc + (pi.eval_poly(antipode(legs[0])) * pi.eval_word(legs[1])).scale(c);
      }
      Mat expect = Mat::identity(N).scale(counit(w));
      if (!(acc == expect)) {
        ok = false;
        witness = word_str(w);
        break;
      }
    }
    rep.add("antipode axiom in pi", ok, witness);
  }

  // (iii) coassociativity at the representation level on sampled words.
  {
    std::mt19937 rng(777);
    std::vector<GenId> alpha = uq_generators(N);
    bool ok = true;
    std::string witness;
    for (int t = 0; t < 16 && ok; ++t) {
      int len = 1 + static_cast<int>(rng() % 3);
      Word w;
      for (int s = 0; s < len; ++s) w.g.push_back(alpha[rng() % alpha.size()]);
      // (Delta (x) id) Delta and (id (x) Delta) Delta, pushed through pi^{(x)3};
      // entries of the 3-fold tensor matrix indexed by 6-tuples.
      auto eval3 = [&](bool left_first) {
        std::map<std::vector<std::uint8_t>, QRat> entries;
        TensorPoly outer = coproduct(w, 2);
        for (const auto& [legs, c] : outer.terms()) {
          TensorPoly inner = coproduct(left_first ? legs[0] : legs[1], 2);
          for (const auto& [il, ic] : inner.terms()) {
            std::vector<Word> tri = left_first ? std::vector<Word>{il[0], il[1], legs[1]}
                                               : std::vector<Word>{legs[0], il[0], il[1]};
            QRat coeff = c * ic;
            Mat m0 = pi.eval_word(tri[0]), m1 = pi.eval_word(tri[1]), m2 = pi.eval_word(tri[2]);
            for (int a = 0; a < N; ++a)
              for (int b = 0; b < N; ++b) {
                if (m0.at(a, b).is_zero()) continue;
                for (int cdx = 0; cdx < N; ++cdx)
                  for (int d = 0; d < N; ++d) {
                    if (m1.at(cdx, d).is_zero()) continue;
                    for (int e = 0; e < N; ++e)
                      for (int f = 0; f < N; ++f) {
                        if (m2.at(e, f).is_zero()) continue;
                        std::vector<std::uint8_t> key = {
                            static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                            static_cast<std::uint8_t>(cdx), static_cast<std::uint8_t>(d),
                            static_cast<std::uint8_t>(e), static_cast<std::uint8_t>(f)};
                        QRat add = coeff * m0.at(a, b) * m1.at(cdx, d) * m2.at(e, f);
                        auto it = entries.find(key);
                        if (it == entries.end())
                          entries.emplace(key, add);
                        else {
                          it->second += add;
                          if (it->second.is_zero()) entries.erase(it);
                        }
                      }
                  }
              }
          }
        }
        return entries;
      };
      if (eval3(true) != eval3(false)) {
        ok = false;
        witness = word_str(w);
      }
    }
    rep.add("coassociativity at pairing level", ok, witness);
  }

  // (iv) K conjugation: pi(K_i) pi(E_j) pi(K_i)^-1 = q^{a_ij} pi(E_j).
  {
    CartanMatrix A(N);
    bool ok = true;
    std::string witness;
    for (int i = 1; i < N && ok; ++i)
      for (int j = 1; j < N && ok; ++j) {
        Mat lhs = pi.mat(gen_K(i)) * pi.mat(gen_E(j)) * pi.mat(gen_Kinv(i));
        Mat rhs = pi.mat(gen_E(j)).scale(QRat::q_power(A.a(i, j)));
        if (!(lhs == rhs)) {
          ok = false;
          witness = "K_" + std::to_string(i) + " E_" + std::to_string(j);
        }
      }
    rep.add("K conjugation in pi", ok, witness);
  }

  return rep;
}

}  // namespace qmx
