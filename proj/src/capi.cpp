// Extern-C surface over the engine. Exceptions stop at this boundary:
// invalid_argument becomes CDGL_ERR_INVALID_ARGUMENT, anything else becomes
// CDGL_ERR_INTERNAL, and the message lands in a thread-local slot.
#include "cdgl.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "cosimplicial.hpp"
#include "loop.hpp"
#include "serialize.hpp"
#include "suites.hpp"

struct cdgl_model {
  cdgl::Model m;
};

struct cdgl_report {
  cdgl::VerificationReport r;
};

namespace {

thread_local std::string g_error;

template <class F>
cdgl_status guard(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return CDGL_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_error = e.what();
    return CDGL_ERR_INTERNAL;
  }
}

cdgl_status fail_invalid(const char* msg) {
  g_error = msg;
  return CDGL_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* cdgl_last_error(void) { return g_error.c_str(); }

cdgl_status cdgl_model_build(int n, int truncation, int modified,
                             cdgl_model** out) {
  if (!out) return fail_invalid("out must not be NULL");
  return guard([&] {
    if (n < 0 || n > 4)
      throw std::invalid_argument("level must be between 0 and 4, got " +
                                  std::to_string(n));
    if (truncation < 1)
      throw std::invalid_argument("truncation must be at least 1, got " +
                                  std::to_string(truncation));
    int t = n == 4 ? std::min(truncation, 3) : truncation;
    *out = new cdgl_model{cdgl::simplex_model(n, t, modified != 0)};
    return CDGL_OK;
  });
}

cdgl_status cdgl_model_to_json(const cdgl_model* m, char** out) {
  if (!m) return fail_invalid("model must not be NULL");
  if (!out) return fail_invalid("out must not be NULL");
  return guard([&] {
    *out = copy_out(cdgl::dump(cdgl::model_to_json(m->m)));
    return CDGL_OK;
  });
}

void cdgl_model_free(cdgl_model* m) { delete m; }

cdgl_status cdgl_suite_run(const char* suite, int truncation, int cap,
                           int seed, const char* model, cdgl_report** out) {
  if (!suite) return fail_invalid("suite must not be NULL");
  if (!out) return fail_invalid("out must not be NULL");
  return guard([&] {
    cdgl::SuiteOptions opt;
    opt.truncation = truncation;
    opt.cap = cap;
    opt.seed = seed;
    if (model) opt.model = model;
    *out = new cdgl_report{cdgl::run_suite(suite, opt)};
    return CDGL_OK;
  });
}

int cdgl_report_passed(const cdgl_report* r) {
  return r && r->r.passed ? 1 : 0;
}

size_t cdgl_report_check_count(const cdgl_report* r) {
  return r ? r->r.checks.size() : 0;
}

const char* cdgl_report_check_id(const cdgl_report* r, size_t index) {
  if (!r || index >= r->r.checks.size()) return nullptr;
  return r->r.checks[index].id.c_str();
}

int cdgl_report_check_passed(const cdgl_report* r, size_t index) {
  if (!r || index >= r->r.checks.size()) return -1;
  return r->r.checks[index].passed ? 1 : 0;
}

const char* cdgl_report_check_detail(const cdgl_report* r, size_t index) {
  if (!r || index >= r->r.checks.size()) return nullptr;
  return r->r.checks[index].detail.c_str();
}

double cdgl_report_check_seconds(const cdgl_report* r, size_t index) {
  if (!r || index >= r->r.checks.size()) return -1.0;
  return r->r.checks[index].seconds;
}

cdgl_status cdgl_report_render(const cdgl_report* r, int json, int timings,
                               char** out) {
  if (!r) return fail_invalid("report must not be NULL");
  if (!out) return fail_invalid("out must not be NULL");
  return guard([&] {
    std::string text =
        json ? cdgl::dump(cdgl::report_to_json(r->r, timings != 0))
             : cdgl::render_text(r->r, timings != 0);
    *out = copy_out(text);
    return CDGL_OK;
  });
}

void cdgl_report_free(cdgl_report* r) { delete r; }

cdgl_status cdgl_lambda_homology(const char* json_text, int truncation,
                                 int cap, char** out) {
  if (!json_text) return fail_invalid("json_text must not be NULL");
  if (!out) return fail_invalid("out must not be NULL");
  return guard([&] {
    if (cap < 1)
      throw std::invalid_argument("cap must be at least 1, got " +
                                  std::to_string(cap));
    cdgl::FiniteSimplicialSet X = cdgl::FiniteSimplicialSet::parse(json_text);
    std::vector<int> dims = cdgl::lambda_homology(X, truncation, 1, cap);
    cdgl::Json j = dims;
    *out = copy_out(j.dump());
    return CDGL_OK;
  });
}

void cdgl_string_free(char* s) { std::free(s); }

}  // extern "C"
