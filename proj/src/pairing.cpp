#include "qmx/pairing.hpp"

#include <algorithm>

namespace qmx {

int perm_length(const std::vector<int>& w) {
  int l = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++l;
  return l;
}

Minor make_minor(int m, std::vector<int> cols, int N) {
  if (static_cast<int>(cols.size()) != m) fail_domain("minor needs exactly m columns");
  for (size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] < 1 || cols[k] > N) fail_domain("minor column out of range");
    if (k > 0 && cols[k] <= cols[k - 1]) fail_domain("minor columns must be strictly increasing");
  }
  return Minor{m, std::move(cols)};
}

NCPoly minor_expand(const Minor& mn) {
  NCPoly out;
  std::vector<int> perm(static_cast<size_t>(mn.m));
  for (int k = 0; k < mn.m; ++k) perm[static_cast<size_t>(k)] = k;
  do {
    Word w;
    for (int r = 0; r < mn.m; ++r)
      w.g.push_back(gen_u(r + 1, mn.cols[static_cast<size_t>(perm[static_cast<size_t>(r)])]));
    int l = perm_length(perm);
    QRat c = QRat::q_power(l);
    if (l % 2 == 1) c = -c;  // (-q)^l
    out.add_term(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

QRat pair_value(const NCPoly& u_poly, const Word& w, int N) {
  QRat total;
  for (const auto& [mono, c] : u_poly.terms()) {
    if (mono.empty()) {
      total += c * counit(w);
      continue;
    }
    MultiIdx rows, cols;
    for (const GenId& g : mono.g) {
      if (g.kind != Kind::U) fail_domain("pair expects a polynomial in u generators");
      rows.push_back(g.i);
      cols.push_back(g.j);
    }
    PairState state = transport(rows, w, N);
    auto it = state.find(cols);
    if (it != state.end()) total += c * it->second;
  }
  return total;
}

std::vector<Word> uq_words_sorted(int N, int L) {
  std::vector<GenId> alpha = uq_generators(N);
  std::vector<Word> out;
  for (int len = 0; len <= L; ++len) {
    auto ws = words_of_length(alpha, len);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  auto f_count = [](const Word& w) {
    int f = 0;
    for (const GenId& g : w.g)
      if (g.kind == Kind::F) ++f;
    return f;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return f_count(a) < f_count(b);
  });
  return out;
}

Word kappa_word(const Word& eta) {
  Word k;
  for (const GenId& g : eta.g) {
    switch (g.kind) {
      case Kind::E: k.g.push_back(gen_K(g.i)); break;
      case Kind::F: break;  // left part of 1 (x) F
      case Kind::K:
      case Kind::Kinv: k.g.push_back(g); break;
      default: fail_domain("kappa_word expects a U_q word");
    }
  }
  return k;
}

FunctionalTable dual_divide(int N, const NCPoly& x, const NCPoly& y, int L) {
  if (pair_value(x, Word{}, N).is_zero())
    fail_domain("dual division: divisor is not invertible at identity");
  FunctionalTable f;
  f.L = L;
  for (const Word& eta : uq_words_sorted(N, L)) {
    TensorPoly cp = coproduct(eta, 2);
    QRat acc = pair_value(y, eta, N);
    QRat pivot;
    bool have_pivot = false;
    for (const auto& [legs, c] : cp.terms()) {
      if (legs[1] == eta) {
        pivot = pair_value(x, legs[0], N) * c;
        have_pivot = true;
        continue;
      }
      QRat xl = pair_value(x, legs[0], N);
      if (xl.is_zero()) continue;
      acc -= c * xl * f.at(legs[1]);
    }
    if (!have_pivot) fail_internal("dual division: no pivot term for " + word_str(eta));
    if (pivot.is_zero()) fail_guard("dual division: pivot pairing vanishes at " + word_str(eta));
    f.v.emplace(eta, acc / pivot);
  }
  return f;
}

std::pair<Minor, Minor> embed_cols(int m, int n, int a, int alpha) {
  if (a < 1 || a > n || alpha < 1 || alpha > m) fail_domain("embed_cols index out of range");
  std::vector<int> den, num;
  for (int j = 1; j <= m; ++j) {
    den.push_back(j);
    if (j != m + 1 - alpha) num.push_back(j);
  }
  num.push_back(m + a);
  std::sort(num.begin(), num.end());
  return {make_minor(m, std::move(den), m + n), make_minor(m, std::move(num), m + n)};
}

Embedding::Embedding(int m, int n, int L) : m_(m), n_(n), N_(m + n), L_(L) {
  if (m < 1 || n < 1) fail_domain("Embedding requires m, n >= 1");
  if (L < 1) fail_domain("Embedding requires L >= 1");
  MultiIdx start(static_cast<size_t>(m_));
  for (int r = 0; r < m_; ++r) start[static_cast<size_t>(r)] = static_cast<std::uint8_t>(r + 1);
  PairState init;
  init.emplace(std::move(start), QRat(1));
  states_.emplace(Word{}, std::move(init));
}

std::vector<Word> Embedding::core_probes(int maxlen) const {
  return uq_words_sorted(N_, maxlen);
}

std::vector<Word> Embedding::e_words(int len) const {
  std::vector<GenId> es;
  for (int i = 1; i < N_; ++i) es.push_back(gen_E(i));
  return words_of_length(es, len);
}

const PairState& Embedding::state(const Word& w) {
  auto it = states_.find(w);
  if (it != states_.end()) return it->second;
  const PairState& prev = state(w.prefix(w.size() - 1));
  PairState next = apply_letter(prev, w[w.size() - 1], N_);
  return states_.emplace(w, std::move(next)).first->second;
}

QRat Embedding::minor_value(const Minor& mn, const Word& w) {
  const PairState& st = state(w);
  QRat total;
  std::vector<int> perm(static_cast<size_t>(mn.m));
  for (int k = 0; k < mn.m; ++k) perm[static_cast<size_t>(k)] = k;
  do {
    MultiIdx cols(static_cast<size_t>(mn.m));
    for (int r = 0; r < mn.m; ++r)
      cols[static_cast<size_t>(r)] =
          static_cast<std::uint8_t>(mn.cols[static_cast<size_t>(perm[static_cast<size_t>(r)])]);
    auto it = st.find(cols);
    if (it == st.end()) continue;
    int l = perm_length(perm);
    QRat c = QRat::q_power(l);
    if (l % 2 == 1) c = -c;
    total += c * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Embedding::GenFn& Embedding::gen_fn(int a, int alpha) {
  auto key = std::make_pair(a, alpha);
  auto it = gens_.find(key);
  if (it == gens_.end()) {
    auto [den, num] = embed_cols(m_, n_, a, alpha);
    it = gens_.emplace(key, GenFn{std::move(den), std::move(num), {}}).first;
  }
  return it->second;
}

QRat Embedding::gen_value_impl(GenFn& fn, const Word& eta) {
  auto it = fn.memo.find(eta);
  if (it != fn.memo.end()) return it->second;
  // Triangular convolution solve for f = den^-1 num, one word at a time:
  // the full-right-leg term of Delta(eta) has a grouplike K-word on the
  // left and pivots the equation; all other right legs are strictly
  // earlier in the (length, F-count) order.
  TensorPoly cp = coproduct(eta, 2);
  QRat acc = minor_value(fn.num, eta);
  QRat pivot;
  bool have_pivot = false;
  for (const auto& [legs, c] : cp.terms()) {
    if (legs[1] == eta) {
      pivot = minor_value(fn.den, legs[0]) * c;
      have_pivot = true;
      continue;
    }
    QRat xl = minor_value(fn.den, legs[0]);
    if (xl.is_zero()) continue;
    acc -= c * xl * gen_value_impl(fn, legs[1]);
  }
  if (!have_pivot) fail_internal("no pivot term for " + word_str(eta));
  if (pivot.is_zero()) fail_guard("pivot pairing vanishes at " + word_str(eta));
  QRat val = acc / pivot;
  return fn.memo.emplace(eta, std::move(val)).first->second;
}

QRat Embedding::gen_value(int a, int alpha, const Word& eta) {
  return gen_value_impl(gen_fn(a, alpha), eta);
}

QRat Embedding::monomial_value(const Word& t_word, const Word& eta) {
  if (t_word.empty()) return counit(eta);
  const GenId& head = t_word[0];
  if (head.kind != Kind::T) fail_domain("monomial_value expects a word in t letters");
  if (t_word.size() == 1) return gen_value(head.i, head.j, eta);
  auto key = std::make_pair(t_word, eta);
  auto it = mono_memo_.find(key);
  if (it != mono_memo_.end()) return it->second;
  Word rest = t_word.suffix(1);
  QRat total;
  TensorPoly cp = coproduct(eta, 2);
  for (const auto& [legs, c] : cp.terms()) {
    QRat left = gen_value(head.i, head.j, legs[0]);
    if (left.is_zero()) continue;
    QRat right = monomial_value(rest, legs[1]);
    if (!right.is_zero()) total += c * left * right;
  }
  return mono_memo_.emplace(std::move(key), std::move(total)).first->second;
}

QRat Embedding::poly_value(const NCPoly& P, const Word& eta) {
  QRat total;
  for (const auto& [w, c] : P.terms()) total += c * monomial_value(w, eta);
  return total;
}

FunctionalTable Embedding::gen_table(int a, int alpha) {
  FunctionalTable t;
  t.L = L_;
  for (const Word& eta : core_probes(L_)) t.v.emplace(eta, gen_value(a, alpha, eta));
  return t;
}

Report Embedding::embed_check(int D, const Calculus& calc) {
  Report rep;
  rep.suite = "embed";
  rep.param("m", std::to_string(m_));
  rep.param("n", std::to_string(n_));
  rep.param("L", std::to_string(L_));
  rep.param("D", std::to_string(D));

  // (i) coordinate-sector relations pair to zero against every probe word.
  {
    bool ok = true;
    std::string witness;
    const auto& rels = calc.relations().tt;
    for (const Word& eta : core_probes(L_)) {
      for (size_t ri = 0; ri < rels.size(); ++ri) {
        if (!poly_value(rels[ri], eta).is_zero()) {
          ok = false;
          witness = "relation " + rels[ri].str() + " against " + word_str(eta);
          break;
        }
      }
      if (!ok) break;
    }
    rep.param("tt_relations", std::to_string(rels.size()));
    rep.add("relation compatibility", ok, witness);
  }

  // (ii) injectivity evidence via an incremental column-space rank: each
  // probe contributes the vector of all monomial values; E-word probes are
  // appended beyond the core cutoff until the span completes or the
  // degree-distance cap is reached.
  {
    std::vector<Word> monomials;
    for (int d = 0; d <= D; ++d) {
      auto b = calc.basis(d, 0);
      monomials.insert(monomials.end(), b.begin(), b.end());
    }
    std::vector<Word> probe_stream = core_probes(std::min(L_, 3));
    int cap = D * (m_ + n_ - 1);
    for (int len = std::min(L_, 3) + 1; len <= cap; ++len) {
      auto es = e_words(len);
      probe_stream.insert(probe_stream.end(), es.begin(), es.end());
    }

    size_t want = monomials.size();
    std::map<size_t, std::vector<QRat>> echelon;  // pivot coordinate -> monic column
    size_t rank = 0, probes_used = 0;
    for (const Word& eta : probe_stream) {
      ++probes_used;
      std::vector<QRat> col(want);
      for (size_t r = 0; r < want; ++r) col[r] = monomial_value(monomials[r], eta);
      while (true) {
        size_t p = 0;
        while (p < want && col[p].is_zero()) ++p;
        if (p == want) break;
        auto it = echelon.find(p);
        if (it == echelon.end()) {
          QRat inv = col[p].inv();
          for (size_t r = p; r < want; ++r) col[r] *= inv;
          echelon.emplace(p, std::move(col));
          ++rank;
          break;
        }
        QRat factor = col[p];
        for (size_t r = p; r < want; ++r) col[r] -= factor * it->second[r];
      }
      if (rank == want) break;
    }
    bool ok = rank == want;
    std::string witness = ok ? ""
                             : "rank " + std::to_string(rank) + " of " + std::to_string(want) +
                                   " monomials over " + std::to_string(probes_used) + " probes";
    rep.param("monomials", std::to_string(want));
    rep.param("probes_used", std::to_string(probes_used));
    rep.add("injectivity rank", ok, witness);
  }

  return rep;
}

}  // namespace qmx
