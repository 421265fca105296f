#include "qmx/omega.hpp"

#include <algorithm>

namespace qmx {

std::vector<NCPoly> OmegaRelations::all() const {
  std::vector<NCPoly> out;
  out.reserve(tt.size() + tdt.size() + dtdt.size());
  out.insert(out.end(), tt.begin(), tt.end());
  out.insert(out.end(), tdt.begin(), tdt.end());
  out.insert(out.end(), dtdt.begin(), dtdt.end());
  return out;
}

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

OmegaRelations omega_relations(int m, int n) {
  if (m < 1 || n < 1) fail_domain("omega_relations requires m, n >= 1");
  HeckeR rg(m, false);  // Greek block
  HeckeR rl(n, false);  // Latin block
  OmegaRelations rels;

  // Index pairing throughout: the first factor of a product carries the
  // SECOND index of each R-matrix pair (the convention the displayed
  // first-family right side fixes); the embedded coordinate functionals
  // satisfy exactly these relations and reject the opposite pairing.

  // First family: sum RG(gd -> ab) t_b^d t_a^g = sum RL(ab -> cd) t_d^b t_c^a.
  for (int alpha = 1; alpha <= m; ++alpha)
    for (int beta = 1; beta <= m; ++beta)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          NCPoly rel;
          for (int gamma = 1; gamma <= m; ++gamma)
            for (int delta = 1; delta <= m; ++delta) {
              QRat c = rg.entry(gamma, delta, alpha, beta);
              if (!c.is_zero())
                rel.add_term(Word({gen_t(b, delta), gen_t(a, gamma)}), c);
            }
          for (int c1 = 1; c1 <= n; ++c1)
            for (int d1 = 1; d1 <= n; ++d1) {
              QRat c = rl.entry(a, b, c1, d1);
              if (!c.is_zero())
                rel.add_term(Word({gen_t(d1, beta), gen_t(c1, alpha)}), -c);
            }
          if (!rel.is_zero()) rels.tt.push_back(std::move(rel));
        }

  // Second family: sum RG RL t_{b'}^{d'} dt_{a'}^{g'} = dt_b^b t_a^a.
  for (int alpha = 1; alpha <= m; ++alpha)
    for (int beta = 1; beta <= m; ++beta)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          NCPoly rel;
          for (int gp = 1; gp <= m; ++gp)
            for (int dp = 1; dp <= m; ++dp) {
              QRat cg = rg.entry(gp, dp, alpha, beta);
              if (cg.is_zero()) continue;
              for (int ap = 1; ap <= n; ++ap)
                for (int bp = 1; bp <= n; ++bp) {
                  QRat cl = rl.entry(a, b, ap, bp);
                  if (cl.is_zero()) continue;
                  rel.add_term(Word({gen_t(bp, dp), gen_dt(ap, gp)}), cg * cl);
                }
            }
          rel.add_term(Word({gen_dt(b, beta), gen_t(a, alpha)}), QRat(-1));
          if (!rel.is_zero()) rels.tdt.push_back(std::move(rel));
        }

  // Third family: sum RG RL dt_{b'}^{d'} dt_{a'}^{g'} = -dt_b^b dt_a^a.
  for (int alpha = 1; alpha <= m; ++alpha)
    for (int beta = 1; beta <= m; ++beta)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          NCPoly rel;
          for (int gp = 1; gp <= m; ++gp)
            for (int dp = 1; dp <= m; ++dp) {
              QRat cg = rg.entry(gp, dp, alpha, beta);
              if (cg.is_zero()) continue;
              for (int ap = 1; ap <= n; ++ap)
                for (int bp = 1; bp <= n; ++bp) {
                  QRat cl = rl.entry(a, b, ap, bp);
                  if (cl.is_zero()) continue;
                  rel.add_term(Word({gen_dt(bp, dp), gen_dt(ap, gp)}), cg * cl);
                }
            }
          rel.add_term(Word({gen_dt(b, beta), gen_dt(a, alpha)}), QRat(1));
          if (!rel.is_zero()) rels.dtdt.push_back(std::move(rel));
        }

  return rels;
}

Calculus Calculus::build(int m, int n, int checkdeg, std::optional<int> drop_relation) {
  if (checkdeg < 2) fail_domain("build_calculus requires checkdeg >= 2");
  Calculus c;
  c.m_ = m;
  c.n_ = n;
  c.checkdeg_ = checkdeg;
  c.rels_ = omega_relations(m, n);
  for (int alpha = 1; alpha <= m; ++alpha)
    for (int a = 1; a <= n; ++a) c.gens_.push_back(gen_t(a, alpha));
  for (int alpha = 1; alpha <= m; ++alpha)
    for (int a = 1; a <= n; ++a) c.gens_.push_back(gen_dt(a, alpha));

  std::vector<NCPoly> for_rules = c.rels_.all();
  if (drop_relation) {
    if (*drop_relation < 0 || *drop_relation >= static_cast<int>(for_rules.size()))
      fail_domain("drop_relation index out of range");
    for_rules.erase(for_rules.begin() + *drop_relation);
  }
  c.rules_ = derive_rules(for_rules);

  if (!drop_relation) {
    for (int d = 0; d <= checkdeg; ++d)
      for (int k = 0; k <= std::min(m * n, checkdeg); ++k) {
        long long got = c.normal_count(d, k);
        long long want = c.classical_dim(d, k);
        if (got != want)
          fail_internal("flatness mismatch at bidegree (" + std::to_string(d) + "," +
                        std::to_string(k) + "): normal words " + std::to_string(got) +
                        ", classical dimension " + std::to_string(want));
      }
  }
  return c;
}

std::vector<GenId> Calculus::t_generators() const {
  std::vector<GenId> out;
  for (const GenId& g : gens_)
    if (g.kind == Kind::T) out.push_back(g);
  return out;
}

NCPoly Calculus::differential(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    int sign = 1;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      const GenId& g = w[pos];
      if (g.kind == Kind::DT) {
        sign = -sign;  // graded Leibniz crosses a 1-form
        continue;
      }
      if (g.kind != Kind::T) fail_domain("differential applies to t/dt words only");
      Word d = w;
      d.g[pos] = gen_dt(g.i, g.j);
      out.add_term(d, c * QRat(sign));
    }
  }
  return nf(out);
}

long long Calculus::normal_count(int d, int k) const {
  if (d < 0 || k < 0) return 0;
  if (d + k == 0) return 1;
  // DP over (last letter, t-count); all rule leads are quadratic.
  int g = static_cast<int>(gens_.size());
  std::vector<std::vector<long long>> cur(g, std::vector<long long>(d + 1, 0));
  for (int s = 0; s < g; ++s) {
    int dt_used = gens_[s].kind == Kind::DT ? 1 : 0;
    int t_used = 1 - dt_used;
    if (t_used <= d && dt_used <= k) cur[s][t_used] = 1;
  }
  int len = d + k;
  for (int step = 1; step < len; ++step) {
    std::vector<std::vector<long long>> next(g, std::vector<long long>(d + 1, 0));
    for (int b = 0; b < g; ++b) {
      int tb = gens_[b].kind == Kind::T ? 1 : 0;
      for (int a = 0; a < g; ++a) {
        Word pair({gens_[a], gens_[b]});
        if (rules_.match_at(pair, 0).has_value()) continue;
        for (int t = 0; t + tb <= d; ++t) {
          if (cur[a][t]) next[b][t + tb] += cur[a][t];
        }
      }
    }
    cur = std::move(next);
  }
  long long total = 0;
  for (int s = 0; s < g; ++s) total += cur[s][d];
  return total;
}

std::vector<Word> Calculus::basis(int d, int k) const {
  std::vector<Word> out;
  for (const Word& w : normal_words(rules_, gens_, d + k)) {
    if (poly_degree(w) == d && form_degree(w) == k) out.push_back(w);
  }
  return out;
}

std::vector<Word> Calculus::basis_total(int maxtotal) const {
  std::vector<Word> out;
  for (int len = 0; len <= maxtotal; ++len) {
    auto ws = normal_words(rules_, gens_, len);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

std::vector<Word> Calculus::free_words(int d, int k) const {
  std::vector<Word> out;
  for (const Word& w : words_of_length(gens_, d + k)) {
    if (poly_degree(w) == d && form_degree(w) == k) out.push_back(w);
  }
  return out;
}

SpanResult Calculus::bidegree_span(int d, int k) const {
  return quotient_span(rels_.all(), gens_, free_words(d, k));
}

Calculus Calculus::specialized(const Rational& q0) const {
  auto sp = [&](const QRat& c) { return QRat::from_rational(c.specialize(q0)); };
  Calculus c;
  c.m_ = m_;
  c.n_ = n_;
  c.checkdeg_ = checkdeg_;
  c.gens_ = gens_;
  for (const NCPoly& r : rels_.tt) c.rels_.tt.push_back(r.map_coeffs(sp));
  for (const NCPoly& r : rels_.tdt) c.rels_.tdt.push_back(r.map_coeffs(sp));
  for (const NCPoly& r : rels_.dtdt) c.rels_.dtdt.push_back(r.map_coeffs(sp));
  std::vector<Rule> rules;
  for (const Rule& r : rules_.rules()) rules.push_back(Rule{r.lead, r.tail.map_coeffs(sp)});
  c.rules_ = RewriteSystem(std::move(rules));
  return c;
}

}  // namespace qmx
