#include "qmx.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>

#include "qmx/engine.hpp"

using qmx::Error;

struct qmx_engine {
  qmx::Engine impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qmx_status status_of(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::Parse:
      return QMX_ERR_PARSE;
    case Error::Kind::Domain:
    case Error::Kind::Pole:
    case Error::Kind::Guard:
      return QMX_ERR_DOMAIN;
    case Error::Kind::Internal:
      return QMX_ERR_INTERNAL;
  }
  return QMX_ERR_INTERNAL;
}

template <typename Fn>
qmx_status guarded(Fn&& fn) {
  try {
    fn();
    return QMX_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QMX_ERR_INTERNAL;
  }
}

qmx::SuiteOptions options_from_json(const char* options_json) {
  qmx::SuiteOptions opts;
  if (options_json == nullptr || options_json[0] == '\0') return opts;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(options_json);
  } catch (const std::exception& e) {
    qmx::fail_parse(std::string("invalid options JSON: ") + e.what());
  }
  if (j.contains("maxdeg")) opts.maxdeg = j["maxdeg"].get<int>();
  if (j.contains("L")) opts.L = j["L"].get<int>();
  if (j.contains("L1")) opts.L1 = j["L1"].get<int>();
  if (j.contains("L2")) opts.L2 = j["L2"].get<int>();
  if (j.contains("D")) opts.D = j["D"].get<int>();
  if (j.contains("kmax")) opts.kmax = j["kmax"].get<int>();
  if (j.contains("oracle_cap")) opts.oracle_cap = j["oracle_cap"].get<long long>();
  if (j.contains("q0")) opts.q0 = j["q0"].get<std::string>();
  if (j.contains("inject")) opts.inject = j["inject"].get<std::string>();
  return opts;
}

}  // namespace

extern "C" {

const char* qmx_version(void) { return "1.0.0"; }

const char* qmx_last_error(void) { return g_last_error.c_str(); }

void qmx_string_free(char* s) { std::free(s); }

qmx_status qmx_engine_new(int m, int n, qmx_engine** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return QMX_ERR_DOMAIN;
  }
  *out = nullptr;
  return guarded([&] { *out = new qmx_engine{qmx::Engine(m, n)}; });
}

void qmx_engine_free(qmx_engine* e) { delete e; }

qmx_status qmx_normal_form(qmx_engine* e, const char* expr, char** out) {
  if (e == nullptr || expr == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] { *out = dup_string(e->impl.normal_form_str(expr)); });
}

qmx_status qmx_differential(qmx_engine* e, const char* expr, char** out) {
  if (e == nullptr || expr == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] { *out = dup_string(e->impl.differential_str(expr)); });
}

qmx_status qmx_hilbert(qmx_engine* e, int maxdeg, long long oracle_cap, int inject_drop,
                       char** json_out, int* all_pass) {
  if (e == nullptr || json_out == nullptr || all_pass == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] {
    qmx::Report rep = e->impl.hilbert(maxdeg, oracle_cap, inject_drop != 0);
    *json_out = dup_string(rep.json());
    *all_pass = rep.all_pass() ? 1 : 0;
  });
}

qmx_status qmx_rhat(int N, int inject_flip, char** json_out, int* all_pass) {
  if (json_out == nullptr || all_pass == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] {
    qmx::Report rep = qmx::rhat_report(N, inject_flip != 0);
    *json_out = dup_string(rep.json());
    *all_pass = rep.all_pass() ? 1 : 0;
  });
}

qmx_status qmx_pair(int N, const char* func_expr, const char* word, char** out) {
  if (func_expr == nullptr || word == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] {
    if (N < 2) qmx::fail_domain("pair requires N >= 2");
    qmx::Ambient amb;
    amb.N = N;
    qmx::NCPoly f = qmx::parse_expr(func_expr, amb);
    qmx::Word w = qmx::parse_word(word, amb);
    *out = dup_string(qmx::pair_value(f, w, N).str());
  });
}

qmx_status qmx_minor(int m, int n, const char* cols_csv, char** out) {
  if (cols_csv == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] {
    if (m < 1 || n < 1) qmx::fail_domain("minor requires m, n >= 1");
    std::vector<int> cols;
    std::string cur;
    std::string src = cols_csv;
    for (size_t k = 0; k <= src.size(); ++k) {
      if (k == src.size() || src[k] == ',') {
        if (cur.empty()) qmx::fail_parse("empty column entry in list: " + src);
        cols.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(src[k]))) {
        cur.push_back(src[k]);
      } else if (!std::isspace(static_cast<unsigned char>(src[k]))) {
        qmx::fail_parse("invalid column list: " + src);
      }
    }
    qmx::Minor mn = qmx::make_minor(m, std::move(cols), m + n);
    *out = dup_string(qmx::render(qmx::minor_expand(mn)));
  });
}

qmx_status qmx_derive_action(qmx_engine* e, int L, char** action_json, char** rules_json) {
  if (e == nullptr || action_json == nullptr || rules_json == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] {
    *action_json = dup_string(e->impl.action_json(L));
    *rules_json = dup_string(e->impl.rules_json());
  });
}

qmx_status qmx_verify(qmx_engine* e, const char* suite, const char* options_json,
                      char** json_report, int* all_pass) {
  if (e == nullptr || suite == nullptr || json_report == nullptr || all_pass == nullptr) {
    g_last_error = "null argument";
    return QMX_ERR_DOMAIN;
  }
  return guarded([&] {
    qmx::SuiteOptions opts = options_from_json(options_json);
    qmx::Report rep = e->impl.run_suite(suite, opts);
    *json_report = dup_string(rep.json());
    *all_pass = rep.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
