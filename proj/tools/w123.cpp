#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "w123/w123.h"

namespace {

enum Exit {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kTimeout = 3,
  kCapExceeded = 4,
  kInsufficientTerms = 5,
  kNotAvailable = 6,
  kError = 7,
};

int exit_for(w123_status s) {
  switch (s) {
    case W123_OK: return kOk;
    case W123_ERR_INVALID_ARGUMENT: return kUsage;
    case W123_ERR_TIMEOUT: return kTimeout;
    case W123_ERR_CAP_EXCEEDED: return kCapExceeded;
    case W123_ERR_INSUFFICIENT_TERMS: return kInsufficientTerms;
    case W123_ERR_NOT_AVAILABLE: return kNotAvailable;
    default: return kError;
  }
}

int report_error(w123_status s) {
  std::cerr << "w123: " << w123_status_name(s) << ": " << w123_last_error() << "\n";
  return exit_for(s);
}

// Renders with f, prints the result and frees it.
template <typename Render>
int emit(Render&& render) {
  char* text = nullptr;
  w123_status s = render(&text);
  if (s != W123_OK) return report_error(s);
  std::fputs(text, stdout);
  w123_string_free(text);
  return kOk;
}

struct Options {
  std::string cache_dir;
  bool no_cache = false;
  unsigned r = 1;
  unsigned nmax = 10;
  std::string method = "scheme";
  std::string format = "text";
  std::size_t cap = 12;
  std::string backend = "resultants";
  double timeout = 120;
  unsigned max_order = 6;
  unsigned max_degree = 10;
  double tol = 0.01;
};

const std::map<std::string, w123_method> kMethods = {{"brute", W123_METHOD_BRUTE},
                                                     {"recurrence", W123_METHOD_RECURRENCE},
                                                     {"scheme", W123_METHOD_SCHEME},
                                                     {"linear-rec", W123_METHOD_LINEAR_REC}};
const std::map<std::string, w123_format> kFormats = {
    {"text", W123_FORMAT_TEXT}, {"json", W123_FORMAT_JSON}, {"bfile", W123_FORMAT_BFILE}};
const std::map<std::string, w123_backend> kBackends = {{"resultants", W123_BACKEND_RESULTANTS},
                                                       {"buchberger", W123_BACKEND_BUCHBERGER}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting, equations, recurrences and asymptotics for 123-avoiding words with r copies of each letter"};
  app.set_version_flag("--version", std::string(w123_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "Artifact cache directory (default: $W123_CACHE_DIR or the user cache)");
  app.add_flag("--no-cache", o.no_cache, "Neither read nor write cached artifacts");

  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "Copies of each letter")->required()->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, bool bfile) {
    auto* opt = sub->add_option("--format", o.format, "Output format");
    opt->check(bfile ? CLI::IsMember({"text", "json", "bfile"}) : CLI::IsMember({"text", "json"}));
  };

  auto* count = app.add_subcommand("count", "Print w_r(0..nmax)");
  add_r(count);
  count->add_option("--nmax", o.nmax, "Last n");
  count->add_option("--method", o.method, "brute, recurrence, scheme or linear-rec")
      ->check(CLI::IsMember({"brute", "recurrence", "scheme", "linear-rec"}));
  count->add_option("--cap", o.cap, "Longest word length the brute-force method accepts");
  add_format(count, true);

  auto* scheme = app.add_subcommand("scheme", "Print the system of equations for the generating functions");
  add_r(scheme);
  add_format(scheme, false);

  auto* elim = app.add_subcommand("eliminate", "Derive the algebraic equation for f_r and check it");
  add_r(elim);
  elim->add_option("--backend", o.backend, "resultants or buchberger")
      ->check(CLI::IsMember({"resultants", "buchberger"}));
  elim->add_option("--timeout", o.timeout, "Seconds; 0 for no limit");
  add_format(elim, false);

  auto* guess = app.add_subcommand("guess", "Guess and verify a linear recurrence for w_r(n)");
  add_r(guess);
  guess->add_option("--max-order", o.max_order, "Largest order tried")->check(CLI::PositiveNumber);
  guess->add_option("--max-degree", o.max_degree, "Largest coefficient degree tried");
  add_format(guess, false);

  auto* asympt = app.add_subcommand("asympt", "Check the growth rate (r+1)*2^r and fit the asymptotic constants");
  add_r(asympt);
  asympt->add_option("--nmax", o.nmax, "Number of terms used")->default_val(2000);
  asympt->add_option("--tol", o.tol, "Relative tolerance on the growth rate");
  add_format(asympt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  w123_context* ctx = nullptr;
  if (w123_status s = w123_context_new(o.cache_dir.empty() ? nullptr : o.cache_dir.c_str(), o.no_cache ? 0 : 1, &ctx);
      s != W123_OK)
    return report_error(s);
  const w123_format format = kFormats.at(o.format);
  int rc = kOk;

  if (count->parsed()) {
    w123_context_set_brute_cap(ctx, o.cap);
    w123_sequence* seq = nullptr;
    w123_status s = w123_count(ctx, o.r, o.nmax, kMethods.at(o.method), &seq);
    rc = s != W123_OK ? report_error(s) : emit([&](char** t) { return w123_sequence_render(seq, format, t); });
    w123_sequence_free(seq);
  } else if (scheme->parsed()) {
    w123_scheme* sch = nullptr;
    w123_status s = w123_scheme_build(o.r, &sch);
    rc = s != W123_OK ? report_error(s) : emit([&](char** t) { return w123_scheme_render(sch, format, t); });
    w123_scheme_free(sch);
  } else if (elim->parsed()) {
    w123_equation* eq = nullptr;
    w123_status s = w123_eliminate(ctx, o.r, kBackends.at(o.backend), o.timeout, &eq);
    rc = s != W123_OK ? report_error(s) : emit([&](char** t) { return w123_equation_render(eq, format, t); });
    if (rc == kOk && !w123_equation_passed(eq)) rc = kVerificationFailed;
    w123_equation_free(eq);
  } else if (guess->parsed()) {
    w123_recurrence* rec = nullptr;
    w123_status s = w123_guess(ctx, o.r, o.max_order, o.max_degree, &rec);
    rc = s != W123_OK ? report_error(s) : emit([&](char** t) { return w123_recurrence_render(rec, format, t); });
    if (rc == kOk && (!w123_recurrence_found(rec) || w123_recurrence_matches_published(rec) == 0))
      rc = kVerificationFailed;
    w123_recurrence_free(rec);
  } else if (asympt->parsed()) {
    w123_report* rep = nullptr;
    w123_status s = w123_asymptotics(ctx, o.r, o.nmax, o.tol, &rep);
    rc = s != W123_OK ? report_error(s) : emit([&](char** t) { return w123_report_render(rep, format, t); });
    if (rc == kOk && !w123_report_passed(rep)) rc = kVerificationFailed;
    w123_report_free(rep);
  }
  w123_context_free(ctx);
  return rc;
}
