#include "qmx/action.hpp"

#include <algorithm>
#include <sstream>

namespace qmx {

const NCPoly& ActionTable::t_entry(const GenId& xi, int a, int alpha) const {
  auto it = t_entries.find(letter_key(xi));
  if (it == t_entries.end()) fail_domain("generator missing from action table: " + atom_str(xi));
  auto jt = it->second.find({a, alpha});
  if (jt == it->second.end()) fail_domain("coordinate missing from action table");
  return jt->second;
}

const NCPoly& ActionTable::dt_entry(const GenId& xi, int a, int alpha) const {
  auto it = dt_entries.find(letter_key(xi));
  if (it == dt_entries.end()) fail_domain("generator missing from action table: " + atom_str(xi));
  auto jt = it->second.find({a, alpha});
  if (jt == it->second.end()) fail_domain("coordinate missing from action table");
  return jt->second;
}

ActionTable ActionTable::specialized(const Rational& q0, const Calculus& calc) const {
  auto sp = [&](const QRat& c) { return QRat::from_rational(c.specialize(q0)); };
  ActionTable out;
  out.m = m;
  out.n = n;
  out.L = L;
  out.rank = rank;
  out.ansatz_degree = ansatz_degree;
  for (const auto& [key, entries] : t_entries)
    for (const auto& [coord, poly] : entries) out.t_entries[key][coord] = poly.map_coeffs(sp);
  for (const auto& [key, entries] : dt_entries)
    for (const auto& [coord, poly] : entries) out.dt_entries[key][coord] = poly.map_coeffs(sp);
  (void)calc;
  return out;
}

namespace {

/// Ansatz columns: normal monomials in the t letters up to the given degree
/// (the empty word stands for the constant term).
std::vector<Word> ansatz_monomials(const Calculus& calc, int maxdeg) {
  std::vector<Word> cols;
  for (int d = 0; d <= maxdeg; ++d) {
    auto b = calc.basis(d, 0);
    cols.insert(cols.end(), b.begin(), b.end());
  }
  return cols;
}

// Probe words for the ansatz solve: the full-alphabet family up to L-1,
// extended with pure E-words up to the degree-distance cap (coordinates
// vanish on words shorter than their minor column distance, so plain
// truncation cannot reach full rank beyond the smallest sizes).
std::vector<Word> gram_probes(Embedding& emb, int maxdeg, int L) {
  std::vector<Word> probes = emb.core_probes(L - 1);
  int cap = maxdeg * (emb.m() + emb.n() - 1);
  for (int len = L; len <= cap; ++len) {
    auto es = emb.e_words(len);
    probes.insert(probes.end(), es.begin(), es.end());
  }
  return probes;
}

struct GramSolver {
  std::vector<Word> probes;
  std::vector<Word> cols;
  std::vector<std::vector<QRat>> G;  // probes x cols
  std::vector<size_t> pivot_rows;    // one independent probe row per column
  long long rank = 0;

  GramSolver(Embedding& emb, const Calculus& calc, int maxdeg, int L) {
    probes = gram_probes(emb, maxdeg, L);
    cols = ansatz_monomials(calc, maxdeg);
    G.assign(probes.size(), std::vector<QRat>(cols.size()));
    for (size_t r = 0; r < probes.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c) G[r][c] = emb.monomial_value(cols[c], probes[r]);
    // Column-wise elimination to find one pivot row per column.
    std::vector<std::vector<QRat>> work = G;
    std::vector<bool> used(probes.size(), false);
    for (size_t c = 0; c < cols.size(); ++c) {
      size_t pr = probes.size();
      for (size_t r = 0; r < probes.size(); ++r) {
        if (!used[r] && !work[r][c].is_zero()) {
          pr = r;
          break;
        }
      }
      if (pr == probes.size()) return;  // rank deficient; caller reports
      used[pr] = true;
      pivot_rows.push_back(pr);
      QRat inv = work[pr][c].inv();
      for (size_t cc = c; cc < cols.size(); ++cc) work[pr][cc] *= inv;
      for (size_t r = 0; r < probes.size(); ++r) {
        if (r == pr || work[r][c].is_zero()) continue;
        QRat f = work[r][c];
        for (size_t cc = c; cc < cols.size(); ++cc) work[r][cc] -= f * work[pr][cc];
      }
      ++rank;
    }
  }

  bool full_rank() const { return rank == static_cast<long long>(cols.size()); }

  /// Exact solve of G x = b restricted to the pivot rows, then a residual
  /// check over every probe row; nullopt when the system is inconsistent.
  std::optional<std::vector<QRat>> solve(const std::vector<QRat>& b) const {
    size_t nc = cols.size();
    std::vector<std::vector<QRat>> a(nc, std::vector<QRat>(nc + 1));
    for (size_t r = 0; r < nc; ++r) {
      for (size_t c = 0; c < nc; ++c) a[r][c] = G[pivot_rows[r]][c];
      a[r][nc] = b[pivot_rows[r]];
    }
    for (size_t c = 0; c < nc; ++c) {
      size_t pr = c;
      while (pr < nc && a[pr][c].is_zero()) ++pr;
      if (pr == nc) fail_internal("pivot submatrix unexpectedly singular");
      std::swap(a[c], a[pr]);
      QRat inv = a[c][c].inv();
      for (size_t cc = c; cc <= nc; ++cc) a[c][cc] *= inv;
      for (size_t r = 0; r < nc; ++r) {
        if (r == c || a[r][c].is_zero()) continue;
        QRat f = a[r][c];
        for (size_t cc = c; cc <= nc; ++cc) a[r][cc] -= f * a[c][cc];
      }
    }
    std::vector<QRat> x(nc);
    for (size_t c = 0; c < nc; ++c) x[c] = a[c][nc];
    for (size_t r = 0; r < G.size(); ++r) {
      QRat acc = -b[r];
      for (size_t c = 0; c < nc; ++c) acc += G[r][c] * x[c];
      if (!acc.is_zero()) return std::nullopt;
    }
    return x;
  }
};

NCPoly solution_poly(const GramSolver& solver, const std::vector<QRat>& x) {
  NCPoly p;
  for (size_t c = 0; c < solver.cols.size(); ++c) p.add_term(solver.cols[c], x[c]);
  return p;
}

std::vector<QRat> rhs_for(Embedding& emb, const GenId& xi, int a, int alpha,
                          const std::vector<Word>& probes) {
  std::vector<QRat> b(probes.size());
  for (size_t r = 0; r < probes.size(); ++r)
    b[r] = emb.gen_value(a, alpha, probes[r].append(xi));
  return b;
}

}  // namespace

NCPoly derive_action(Embedding& emb, const Calculus& calc, const GenId& xi, int a, int alpha,
                     int L) {
  for (int deg = 2; deg <= 3; ++deg) {
    GramSolver solver(emb, calc, deg, L);
    if (!solver.full_rank())
      fail_domain("derive_action: probe Gram matrix is rank deficient; increase L");
    auto x = solver.solve(rhs_for(emb, xi, a, alpha, solver.probes));
    if (x) return solution_poly(solver, *x);
    if (deg == 3)
      fail_internal("derive_action: inconsistent system at ansatz degree 3 for " + atom_str(xi));
  }
  fail_internal("unreachable");
}

ActionTable derive_action_table(Embedding& emb, const Calculus& calc, int L) {
  ActionTable tab;
  tab.m = calc.m();
  tab.n = calc.n();
  tab.L = L;

  std::vector<GenId> gens = uq_generators(calc.m() + calc.n());
  for (int deg = 2; deg <= 3; ++deg) {
    tab.ansatz_degree = deg;
    GramSolver solver(emb, calc, deg, L);
    if (!solver.full_rank())
      fail_domain("derive_action: probe Gram matrix is rank deficient; increase L");
    tab.rank = solver.rank;
    bool consistent = true;
    tab.t_entries.clear();
    for (const GenId& xi : gens) {
      for (int a = 1; a <= calc.n() && consistent; ++a)
        for (int alpha = 1; alpha <= calc.m() && consistent; ++alpha) {
          auto x = solver.solve(rhs_for(emb, xi, a, alpha, solver.probes));
          if (!x) {
            consistent = false;
            break;
          }
          tab.t_entries[letter_key(xi)][{a, alpha}] = solution_poly(solver, *x);
        }
      if (!consistent) break;
    }
    if (consistent) break;
    if (deg == 3) fail_internal("derive_action: inconsistent system at ansatz degree 3");
  }

  // K entries must be monomial-preserving with q-power coefficients; a
  // violation means the table is wrong, not the invariant.
  for (const GenId& xi : gens) {
    if (xi.kind != Kind::K && xi.kind != Kind::Kinv) continue;
    for (int a = 1; a <= calc.n(); ++a)
      for (int alpha = 1; alpha <= calc.m(); ++alpha) {
        const NCPoly& e = tab.t_entries[letter_key(xi)][{a, alpha}];
        bool ok = e.term_count() == 1 && e.begin()->first == Word::single(gen_t(a, alpha)) &&
                  e.begin()->second.num().is_monomial() && e.begin()->second.den().is_monomial();
        if (!ok)
          fail_internal("derived K action is not monomial-preserving on " +
                        atom_str(gen_t(a, alpha)) + ": " + e.str());
      }
  }

  // dt entries via d-equivariance: xi . dt := d(xi . t).
  for (const auto& [key, entries] : tab.t_entries)
    for (const auto& [coord, poly] : entries)
      tab.dt_entries[key][coord] = calc.differential(poly);

  // K and K^-1 entries are convolution-inverse on every generator.
  ActionEngine eng(tab, calc);
  for (int i = 1; i < calc.m() + calc.n(); ++i)
    for (int a = 1; a <= calc.n(); ++a)
      for (int alpha = 1; alpha <= calc.m(); ++alpha) {
        NCPoly t = NCPoly::monomial(Word::single(gen_t(a, alpha)));
        NCPoly round = eng.act_letter(gen_K(i), eng.act_letter(gen_Kinv(i), t));
        if (!(round == t))
          fail_internal("K and K^-1 actions are not mutually inverse on " +
                        atom_str(gen_t(a, alpha)));
      }

  return tab;
}

NCPoly ActionEngine::act_letter_word(const GenId& xi, const Word& w) {
  if (w.empty()) return NCPoly::monomial(Word{}, counit(Word::single(xi)));
  auto& slot = memo_[letter_key(xi)];
  auto it = slot.find(w);
  if (it != slot.end()) return it->second;

  const GenId& head = w[0];
  Word rest = w.suffix(1);
  auto base = [&](const GenId& g) -> const NCPoly& {
    return head.kind == Kind::DT ? tab_.dt_entry(g, head.i, head.j)
                                 : tab_.t_entry(g, head.i, head.j);
  };
  NCPoly out;
  switch (xi.kind) {
    case Kind::K:
    case Kind::Kinv:
      out = calc_.nf(base(xi) * act_letter_word(xi, rest));
      break;
    case Kind::E: {
      NCPoly first = base(xi) * NCPoly::monomial(rest);
      NCPoly second = base(gen_K(xi.i)) * act_letter_word(xi, rest);
      out = calc_.nf(first + second);
      break;
    }
    case Kind::F: {
      NCPoly first = base(xi) * act_letter_word(gen_Kinv(xi.i), rest);
      NCPoly second = NCPoly::monomial(Word::single(head)) * act_letter_word(xi, rest);
      out = calc_.nf(first + second);
      break;
    }
    default:
      fail_domain("action letters must be U_q generators: " + atom_str(xi));
  }
  slot.emplace(w, out);
  return out;
}

NCPoly ActionEngine::act_letter(const GenId& xi, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out += act_letter_word(xi, w).scale(c);
  return out;
}

NCPoly ActionEngine::act_word(const Word& uq_word, const NCPoly& p) {
  NCPoly cur = p;
  for (size_t k = uq_word.size(); k-- > 0;) cur = act_letter(uq_word[k], cur);
  return cur;
}

NCPoly ActionEngine::act_poly(const NCPoly& uq_poly, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : uq_poly.terms()) out += act_word(w, p).scale(c);
  return out;
}

namespace {

Report module_algebra_core(const ActionTable& table, const Calculus& calc, int maxdeg,
                           const std::vector<NCPoly>& uq_rels, const std::string& suite,
                           const std::optional<Rational>& q0) {
  Report rep;
  rep.suite = suite;
  rep.param("m", std::to_string(calc.m()));
  rep.param("n", std::to_string(calc.n()));
  rep.param("maxdeg", std::to_string(maxdeg));
  rep.param("L", std::to_string(table.L));
  if (q0) {
    std::ostringstream os;
    os << *q0;
    rep.param("q0", os.str());
  }

  ActionEngine eng(table, calc);
  std::vector<Word> basis = calc.basis_total(maxdeg);

  // (i) operator relations annihilate every basis monomial.
  {
    bool ok = true;
    std::string witness;
    for (const NCPoly& rel : uq_rels) {
      for (const Word& p : basis) {
        NCPoly r = eng.act_poly(rel, NCPoly::monomial(p));
        if (!r.is_zero()) {
          ok = false;
          witness = "relation " + rel.str() + " on " + word_str(p);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("operator relations", ok, witness);
  }

  // (ii) the action descends: every calculus relation is annihilated in the
  // quotient by every Chevalley generator.
  {
    bool ok = true;
    std::string witness;
    std::vector<GenId> gens = uq_generators(calc.m() + calc.n());
    for (const NCPoly& rel : calc.relations().all()) {
      for (const GenId& xi : gens) {
        NCPoly r = calc.nf(eng.act_letter(xi, rel));
        if (!r.is_zero()) {
          ok = false;
          witness = atom_str(xi) + " on relation " + rel.str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("well-definedness on relations", ok, witness);
  }

  // (iii) d-equivariance on the basis.
  {
    bool ok = true;
    std::string witness;
    std::vector<GenId> gens = uq_generators(calc.m() + calc.n());
    for (const GenId& xi : gens) {
      for (const Word& p : basis) {
        NCPoly mono = NCPoly::monomial(p);
        NCPoly lhs = eng.act_letter(xi, calc.differential(mono));
        NCPoly rhs = calc.differential(eng.act_letter(xi, mono));
        if (!(lhs == rhs)) {
          ok = false;
          witness = atom_str(xi) + " on " + word_str(p);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("d-equivariance", ok, witness);
  }

  return rep;
}

}  // namespace

Report verify_module_algebra(const ActionTable& table, const Calculus& calc, int maxdeg) {
  return module_algebra_core(table, calc, maxdeg, uq_relations(calc.m() + calc.n()),
                             "module-algebra", std::nullopt);
}

Report specialize_action(const ActionTable& table, const Calculus& calc, const Rational& q0,
                         int maxdeg) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    fail_domain("specialization point must be a nonzero rational other than +-1 "
                "(the relation denominators q - q^-1 vanish at +-1)");
  auto sp = [&](const QRat& c) { return QRat::from_rational(c.specialize(q0)); };
  Calculus sc = calc.specialized(q0);
  ActionTable st = table.specialized(q0, calc);
  std::vector<NCPoly> rels;
  for (const NCPoly& r : uq_relations(calc.m() + calc.n())) rels.push_back(r.map_coeffs(sp));
  return module_algebra_core(st, sc, maxdeg, rels, "module-algebra-specialized", q0);
}

Report verify_grading(const ActionTable& table, const Calculus& calc) {
  Report rep;
  rep.suite = "grading";
  int m = calc.m(), n = calc.n();
  rep.param("m", std::to_string(m));
  rep.param("n", std::to_string(n));

  auto shifts_of = [&](const GenId& xi, int a, int alpha) {
    const NCPoly& e = table.t_entry(xi, a, alpha);
    std::vector<int> shifts;
    for (const auto& [w, c] : e.terms()) shifts.push_back(static_cast<int>(w.size()) - 1);
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    return shifts;
  };
  auto shift_str = [](const std::vector<int>& shifts) {
    if (shifts.empty()) return std::string("zero entry");
    std::string s;
    for (int v : shifts) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
  };

  int N = m + n;
  bool levi_ok = true;
  std::string levi_witness;
  for (int i = 1; i < N; ++i) {
    std::vector<GenId> gens = {gen_K(i), gen_Kinv(i)};
    if (i != m) {
      gens.push_back(gen_E(i));
      gens.push_back(gen_F(i));
    }
    for (const GenId& xi : gens)
      for (int a = 1; a <= n; ++a)
        for (int alpha = 1; alpha <= m; ++alpha) {
          auto s = shifts_of(xi, a, alpha);
          if (!(s.empty() || (s.size() == 1 && s[0] == 0))) {
            levi_ok = false;
            levi_witness = atom_str(xi) + " on " + atom_str(gen_t(a, alpha)) + ": shift " +
                           shift_str(s);
          }
        }
  }
  rep.add("Levi generators preserve degree", levi_ok, levi_witness);

  // Measured shifts of the remaining pair are report content.
  bool hidden_nonzero = false;
  for (const GenId& xi : {gen_E(m), gen_F(m)}) {
    std::vector<int> all;
    for (int a = 1; a <= n; ++a)
      for (int alpha = 1; alpha <= m; ++alpha) {
        auto s = shifts_of(xi, a, alpha);
        all.insert(all.end(), s.begin(), s.end());
        for (int v : s)
          if (v != 0) hidden_nonzero = true;
      }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    rep.param("shift(" + atom_str(xi) + ")", shift_str(all));
  }
  rep.add("a hidden generator shifts degree", hidden_nonzero,
          hidden_nonzero ? "" : "both E_m and F_m preserve degree");

  return rep;
}

Report uniqueness_probe(int m, int n, int L1, int L2) {
  if (L2 < L1) fail_domain("uniqueness_probe requires L2 >= L1");
  Report rep;
  rep.suite = "uniqueness";
  rep.param("m", std::to_string(m));
  rep.param("n", std::to_string(n));
  rep.param("L1", std::to_string(L1));
  rep.param("L2", std::to_string(L2));

  Calculus calc = Calculus::build(m, n, 2);
  Embedding e1(m, n, L1);
  ActionTable t1 = derive_action_table(e1, calc, L1);
  ActionTable t2 = t1;
  if (L2 != L1) {
    Embedding e2(m, n, L2);
    t2 = derive_action_table(e2, calc, L2);
  }

  bool ok = true;
  std::string witness;
  for (const GenId& xi : uq_generators(m + n)) {
    for (int a = 1; a <= n && ok; ++a)
      for (int alpha = 1; alpha <= m && ok; ++alpha) {
        if (!(t1.t_entry(xi, a, alpha) == t2.t_entry(xi, a, alpha))) {
          ok = false;
          witness = atom_str(xi) + " on " + atom_str(gen_t(a, alpha));
        }
      }
    if (!ok) break;
  }
  rep.add("tables agree across cutoffs", ok, witness);
  return rep;
}

}  // namespace qmx
