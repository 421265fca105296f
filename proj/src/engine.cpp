#include "qmx/engine.hpp"

#include <json.hpp>

namespace qmx {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail_domain("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw;
  } catch (const std::exception&) {
    fail_parse("invalid rational literal: " + s);
  }
}

Report rhat_report(int N, bool inject_flip) {
  if (N < 2) fail_domain("rhat requires N >= 2");
  HeckeR r(N, false);
  return r.check(inject_flip);
}

Engine::Engine(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) fail_domain("engine requires m, n >= 1");
}

const Calculus& Engine::calculus() {
  if (!calc_) calc_ = Calculus::build(m_, n_, 2);
  return *calc_;
}

Embedding& Engine::embedding(int L) {
  auto it = embeddings_.find(L);
  if (it == embeddings_.end()) it = embeddings_.emplace(L, Embedding(m_, n_, L)).first;
  return it->second;
}

const ActionTable& Engine::table(int L) {
  auto it = tables_.find(L);
  if (it == tables_.end())
    it = tables_.emplace(L, derive_action_table(embedding(L), calculus(), L)).first;
  return it->second;
}

std::string Engine::normal_form_str(const std::string& expr) {
  Ambient amb{m_, n_, m_ + n_};
  NCPoly p = parse_expr(expr, amb);
  return render(calculus().nf(p));
}

std::string Engine::differential_str(const std::string& expr) {
  Ambient amb{m_, n_, m_ + n_};
  NCPoly p = parse_expr(expr, amb);
  return render(calculus().differential(calculus().nf(p)));
}

Report Engine::hilbert(int maxdeg, long long oracle_cap, bool inject_drop) {
  Report rep;
  rep.suite = "hilbert";
  rep.param("m", std::to_string(m_));
  rep.param("n", std::to_string(n_));
  rep.param("maxdeg", std::to_string(maxdeg));
  rep.param("oracle_cap", std::to_string(oracle_cap));

  std::optional<Calculus> dropped;
  if (inject_drop) {
    // Remove the first coordinate-differential relation from the rule
    // derivation only; the oracle keeps the full relation list.
    int drop_idx = static_cast<int>(calculus().relations().tt.size());
    dropped = Calculus::build(m_, n_, 2, drop_idx);
  }
  const Calculus& c = inject_drop ? *dropped : calculus();

  {
    auto overlap = find_unresolved_overlap(c.rules());
    rep.add("overlap certificate", !overlap.has_value(),
            overlap ? "unresolved overlap " + word_str(*overlap) : "");
  }

  int mn = m_ * n_;
  for (int d = 0; d <= maxdeg; ++d)
    for (int k = 0; k <= mn; ++k) {
      long long normal = c.normal_count(d, k);
      long long classical = c.classical_dim(d, k);
      // Free words of the bidegree: C(d+k, k) placements times mn per letter.
      long long freedim = binom(d + k, k);
      for (int s = 0; s < d + k; ++s) freedim *= mn;
      bool run_oracle = freedim <= oracle_cap;
      std::string name =
          "bidegree (" + std::to_string(d) + "," + std::to_string(k) + ")";
      if (run_oracle) {
        long long oracle = c.bidegree_span(d, k).dimension;
        bool ok = normal == classical && oracle == normal;
        rep.add(name, ok,
                ok ? "" : "normal " + std::to_string(normal) + ", classical " +
                              std::to_string(classical) + ", oracle " + std::to_string(oracle));
      } else {
        bool ok = normal == classical;
        rep.add(name + " [oracle via certificate]", ok,
                ok ? "" : "normal " + std::to_string(normal) + ", classical " +
                              std::to_string(classical));
      }
    }
  return rep;
}

Report Engine::run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "hopf") {
    return verify_hopf_in_rep(m_ + n_, opts.kmax);
  }
  if (suite == "embed") {
    return embedding(opts.L).embed_check(opts.D, calculus());
  }
  if (suite == "module-algebra") {
    const ActionTable& tab = table(opts.L);
    ActionTable working = tab;
    if (opts.inject) {
      if (*opts.inject == "corrupt-k") {
        auto& entry = working.t_entries[letter_key(gen_K(1))][{1, 1}];
        entry = entry.scale(QRat::q_power(1));
        working.dt_entries[letter_key(gen_K(1))][{1, 1}] = calculus().differential(entry);
      } else {
        fail_domain("unknown injection for module-algebra: " + *opts.inject);
      }
    }
    if (opts.q0) {
      return specialize_action(working, calculus(), parse_rational(*opts.q0), opts.maxdeg);
    }
    return verify_module_algebra(working, calculus(), opts.maxdeg);
  }
  if (suite == "grading") {
    return verify_grading(table(opts.L), calculus());
  }
  if (suite == "uniqueness") {
    return uniqueness_probe(m_, n_, opts.L1, opts.L2);
  }
  fail_domain("unknown suite: " + suite);
}

std::string Engine::action_json(int L) {
  const ActionTable& tab = table(L);
  nlohmann::ordered_json j;
  j["m"] = tab.m;
  j["n"] = tab.n;
  j["L"] = tab.L;
  j["rank"] = tab.rank;
  j["ansatz_degree"] = tab.ansatz_degree;
  nlohmann::ordered_json t = nlohmann::ordered_json::object();
  for (const GenId& xi : uq_generators(m_ + n_)) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (int alpha = 1; alpha <= m_; ++alpha)
      for (int a = 1; a <= n_; ++a)
        row[atom_str(gen_t(a, alpha))] = render(tab.t_entry(xi, a, alpha));
    t[atom_str(xi)] = row;
  }
  j["table"] = t;
  return j.dump(2);
}

std::string Engine::rules_json() {
  nlohmann::ordered_json j;
  j["m"] = m_;
  j["n"] = n_;
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (const Rule& r : calculus().rules().rules()) rules[word_str(r.lead)] = render(r.tail);
  j["rules"] = rules;
  return j.dump(2);
}

}  // namespace qmx
