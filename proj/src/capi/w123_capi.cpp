#include "w123/w123.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

#include "errors.hpp"
#include "service/pipeline.hpp"
#include "words/words.hpp"

struct w123_context {
  w123::service::Context ctx;
};
struct w123_sequence {
  w123::scheme::CountSequence seq;
  w123::service::CountMethod method;
};
struct w123_scheme {
  w123::scheme::AlgebraicScheme scheme;
};
struct w123_equation {
  w123::service::EliminationOutcome outcome;
};
struct w123_recurrence {
  w123::service::GuessOutcome outcome;
};
struct w123_report {
  w123::service::AsymptoticsOutcome outcome;
};

namespace {

thread_local std::string last_error;

w123_status fail(w123_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
w123_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return W123_OK;
  } catch (const w123::Error& e) {
    return fail(static_cast<w123_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(W123_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(W123_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw w123::InvalidArgument(std::string(what) + " must not be NULL");
}

w123::service::CountMethod to_method(w123_method m) {
  switch (m) {
    case W123_METHOD_BRUTE: return w123::service::CountMethod::brute;
    case W123_METHOD_RECURRENCE: return w123::service::CountMethod::recurrence;
    case W123_METHOD_SCHEME: return w123::service::CountMethod::scheme;
    case W123_METHOD_LINEAR_REC: return w123::service::CountMethod::linear_rec;
  }
  throw w123::InvalidArgument("unknown counting method");
}

w123::service::Format to_format(w123_format f) {
  switch (f) {
    case W123_FORMAT_TEXT: return w123::service::Format::text;
    case W123_FORMAT_JSON: return w123::service::Format::json;
    case W123_FORMAT_BFILE: return w123::service::Format::bfile;
  }
  throw w123::InvalidArgument("unknown output format");
}

std::string render_doc(w123_format format, const nlohmann::json& json, const std::string& text) {
  if (format == W123_FORMAT_JSON) return json.dump(2) + "\n";
  if (format == W123_FORMAT_TEXT) return text;
  throw w123::InvalidArgument("b-file output applies to sequences only");
}

}  // namespace

extern "C" {

const char* w123_version(void) { return W123_VERSION; }

const char* w123_last_error(void) { return last_error.c_str(); }

const char* w123_status_name(w123_status status) {
  switch (status) {
    case W123_OK: return "ok";
    case W123_ERR_INVALID_ARGUMENT: return "invalid argument";
    case W123_ERR_CAP_EXCEEDED: return "cap exceeded";
    case W123_ERR_TIMEOUT: return "timeout";
    case W123_ERR_INSUFFICIENT_TERMS: return "insufficient terms";
    case W123_ERR_NOT_AVAILABLE: return "not available";
    case W123_ERR_SINGULAR_RECURRENCE: return "singular recurrence";
    case W123_ERR_NON_INTEGRAL: return "non-integral term";
    case W123_ERR_NON_DIVISIBLE: return "non-divisible exponent";
    case W123_ERR_DEGENERATE: return "degenerate input";
    case W123_ERR_DEFECT: return "internal consistency check failed";
    case W123_ERR_IO: return "i/o error";
    case W123_ERR_PARSE: return "parse error";
    case W123_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void w123_string_free(char* s) { std::free(s); }

w123_status w123_context_new(const char* cache_dir, int use_cache, w123_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto ctx = std::make_unique<w123_context>();
    if (use_cache)
      ctx->ctx.cache.emplace(cache_dir ? std::filesystem::path(cache_dir) : w123::service::Cache::default_dir());
    *out = ctx.release();
  });
}

w123_status w123_context_set_brute_cap(w123_context* ctx, size_t cap) {
  return guarded([&] {
    require(ctx, "ctx");
    ctx->ctx.brute_cap = cap;
  });
}

void w123_context_free(w123_context* ctx) { delete ctx; }

w123_status w123_count_avoiders(const w123_context* ctx, const unsigned* counts, size_t len, const char* pattern,
                                w123_method method, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    if (len) require(counts, "counts");
    *out = nullptr;
    w123::words::MultiplicityVector a{std::vector<unsigned>(counts, counts + len)};
    w123::algebra::BigInt n;
    if (method == W123_METHOD_BRUTE) {
      require(pattern, "pattern");
      if (std::strlen(pattern) != 3) throw w123::InvalidArgument("pattern must have three letters");
      w123::words::Pattern p({pattern[0] - '0', pattern[1] - '0', pattern[2] - '0'});
      n = w123::words::count_avoiders_bruteforce(a, p, ctx->ctx.brute_cap);
    } else if (method == W123_METHOD_RECURRENCE) {
      if (pattern && std::strcmp(pattern, "123") != 0)
        throw w123::InvalidArgument("the recurrence counts 123-avoiders only");
      n = w123::words::count_avoiders_recurrence(a);
    } else {
      throw w123::InvalidArgument("only the brute and recurrence methods count single multiplicity vectors");
    }
    *out = copy_string(n.get_str());
  });
}

w123_status w123_count(const w123_context* ctx, unsigned r, unsigned nmax, w123_method method, w123_sequence** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    auto m = to_method(method);
    *out = new w123_sequence{w123::service::count_terms(ctx->ctx, r, nmax, m), m};
  });
}

size_t w123_sequence_length(const w123_sequence* seq) { return seq ? seq->seq.terms.size() : 0; }

w123_status w123_sequence_term(const w123_sequence* seq, size_t n, char** out) {
  return guarded([&] {
    require(seq, "seq");
    require(out, "out");
    *out = nullptr;
    if (n >= seq->seq.terms.size()) throw w123::InvalidArgument("term index out of range");
    *out = copy_string(seq->seq.terms[n].get_str());
  });
}

w123_status w123_sequence_render(const w123_sequence* seq, w123_format format, char** out) {
  return guarded([&] {
    require(seq, "seq");
    require(out, "out");
    *out = nullptr;
    *out = copy_string(w123::service::render_sequence(seq->seq, seq->method, to_format(format)));
  });
}

void w123_sequence_free(w123_sequence* seq) { delete seq; }

w123_status w123_scheme_build(unsigned r, w123_scheme** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new w123_scheme{w123::scheme::build_scheme(r)};
  });
}

size_t w123_scheme_equation_count(const w123_scheme* scheme) {
  return scheme ? scheme->scheme.equations().size() : 0;
}

w123_status w123_scheme_render(const w123_scheme* scheme, w123_format format, char** out) {
  return guarded([&] {
    require(scheme, "scheme");
    require(out, "out");
    *out = nullptr;
    *out = copy_string(w123::service::render_scheme(scheme->scheme, to_format(format)));
  });
}

void w123_scheme_free(w123_scheme* scheme) { delete scheme; }

w123_status w123_eliminate(const w123_context* ctx, unsigned r, w123_backend backend, double timeout_seconds,
                           w123_equation** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    w123::elimination::Backend b;
    switch (backend) {
      case W123_BACKEND_RESULTANTS: b = w123::elimination::Backend::resultants; break;
      case W123_BACKEND_BUCHBERGER: b = w123::elimination::Backend::buchberger; break;
      default: throw w123::InvalidArgument("unknown elimination backend");
    }
    *out = new w123_equation{w123::service::run_elimination(ctx->ctx, r, b, timeout_seconds)};
  });
}

w123_verdict w123_equation_verdict(const w123_equation* eq) {
  if (!eq || !eq->outcome.match) return W123_VERDICT_NONE;
  switch (eq->outcome.match->verdict) {
    case w123::elimination::MatchVerdict::equal: return W123_VERDICT_EQUAL;
    case w123::elimination::MatchVerdict::proper_multiple: return W123_VERDICT_PROPER_MULTIPLE;
    case w123::elimination::MatchVerdict::mismatch: return W123_VERDICT_MISMATCH;
  }
  return W123_VERDICT_NONE;
}

int w123_equation_passed(const w123_equation* eq) { return eq && eq->outcome.passed() ? 1 : 0; }

w123_status w123_equation_render(const w123_equation* eq, w123_format format, char** out) {
  return guarded([&] {
    require(eq, "eq");
    require(out, "out");
    *out = nullptr;
    *out = copy_string(render_doc(format, eq->outcome.to_json(), eq->outcome.to_text()));
  });
}

void w123_equation_free(w123_equation* eq) { delete eq; }

w123_status w123_guess(const w123_context* ctx, unsigned r, unsigned max_order, unsigned max_degree,
                       w123_recurrence** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    *out = new w123_recurrence{w123::service::run_guess(ctx->ctx, r, max_order, max_degree)};
  });
}

int w123_recurrence_found(const w123_recurrence* rec) { return rec && rec->outcome.recurrence ? 1 : 0; }

unsigned w123_recurrence_order(const w123_recurrence* rec) {
  return rec && rec->outcome.recurrence ? rec->outcome.recurrence->order() : 0;
}

unsigned w123_recurrence_degree(const w123_recurrence* rec) {
  return rec && rec->outcome.recurrence ? rec->outcome.recurrence->degree() : 0;
}

int w123_recurrence_matches_published(const w123_recurrence* rec) {
  if (!rec || !rec->outcome.matches_published) return -1;
  return *rec->outcome.matches_published ? 1 : 0;
}

w123_status w123_recurrence_render(const w123_recurrence* rec, w123_format format, char** out) {
  return guarded([&] {
    require(rec, "rec");
    require(out, "out");
    *out = nullptr;
    *out = copy_string(render_doc(format, rec->outcome.to_json(), rec->outcome.to_text()));
  });
}

void w123_recurrence_free(w123_recurrence* rec) { delete rec; }

w123_status w123_asymptotics(const w123_context* ctx, unsigned r, unsigned nmax, double tolerance,
                             w123_report** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    *out = new w123_report{w123::service::run_asymptotics(ctx->ctx, r, nmax, tolerance)};
  });
}

int w123_report_passed(const w123_report* rep) { return rep && rep->outcome.passed ? 1 : 0; }

w123_status w123_report_render(const w123_report* rep, w123_format format, char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = nullptr;
    *out = copy_string(render_doc(format, rep->outcome.json, rep->outcome.text));
  });
}

void w123_report_free(w123_report* rep) { delete rep; }

}  // extern "C"
