#include "service/pipeline.hpp"

#include <sstream>

#include "algebra/json_io.hpp"
#include "asymptotics/asymptotics.hpp"
#include "errors.hpp"

namespace w123::service {

using guessing::LinearRecurrence;

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::recurrence: return "recurrence";
    case CountMethod::scheme: return "scheme";
    case CountMethod::linear_rec: return "linear-rec";
  }
  return "scheme";
}

CountMethod count_method_from_string(const std::string& name) {
  for (auto m : {CountMethod::brute, CountMethod::recurrence, CountMethod::scheme, CountMethod::linear_rec})
    if (to_string(m) == name) return m;
  throw InvalidArgument("unknown counting method: " + name);
}

Format format_from_string(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "bfile") return Format::bfile;
  throw InvalidArgument("unknown output format: " + name);
}

namespace {

nlohmann::json terms_json(const std::vector<algebra::BigInt>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : terms) out.push_back(t.get_str());
  return out;
}

std::vector<algebra::BigInt> terms_from_json(const nlohmann::json& j) {
  std::vector<algebra::BigInt> out;
  for (const auto& t : j) out.push_back(algebra::parse_bigint(t.get<std::string>()));
  return out;
}

const CacheKey registry_key(unsigned r) { return {"recurrence", r, {{"role", "verified"}}}; }

std::vector<algebra::BigInt> compute_terms(const Context& ctx, unsigned r, unsigned nmax, CountMethod method) {
  switch (method) {
    case CountMethod::brute: {
      if (static_cast<std::size_t>(r) * nmax > ctx.brute_cap)
        throw CapExceeded("brute force is capped at word length " + std::to_string(ctx.brute_cap) + ", requested " +
                          std::to_string(static_cast<std::size_t>(r) * nmax));
      std::vector<algebra::BigInt> out;
      for (unsigned n = 0; n <= nmax; ++n)
        out.push_back(words::count_avoiders_bruteforce(words::MultiplicityVector::uniform(r, n),
                                                       words::Pattern::p123(), ctx.brute_cap));
      return out;
    }
    case CountMethod::recurrence: {
      words::AvoiderCounter counter;
      std::vector<algebra::BigInt> out;
      for (unsigned n = 0; n <= nmax; ++n) out.push_back(counter.count(words::MultiplicityVector::uniform(r, n)));
      return out;
    }
    case CountMethod::scheme: return scheme::word_counts(r, nmax).terms;
    case CountMethod::linear_rec: {
      auto rec = known_recurrence(ctx, r);
      if (!rec)
        throw NotAvailable("no verified recurrence for r = " + std::to_string(r) + "; run guess first");
      auto initial = scheme::word_counts(r, std::min<unsigned>(nmax, rec->order())).terms;
      return guessing::extend_with_recurrence(*rec, initial, nmax);
    }
  }
  throw InvalidArgument("unknown counting method");
}

}  // namespace

scheme::CountSequence count_terms(const Context& ctx, unsigned r, unsigned nmax, CountMethod method) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  CacheKey key{"sequence", r, {{"method", to_string(method)}, {"nmax", nmax}}};
  if (ctx.cache)
    if (auto hit = ctx.cache->load(key)) return {r, terms_from_json(hit->at("terms"))};
  scheme::CountSequence seq{r, compute_terms(ctx, r, nmax, method)};
  if (ctx.cache) ctx.cache->store(key, {{"terms", terms_json(seq.terms)}});
  return seq;
}

std::string render_sequence(const scheme::CountSequence& seq, CountMethod method, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::text:
      for (std::size_t n = 0; n < seq.terms.size(); ++n) os << (n ? " " : "") << seq.terms[n].get_str();
      os << "\n";
      break;
    case Format::json: {
      nlohmann::json j = {{"schema", "w123.sequence/1"},
                          {"r", seq.r},
                          {"method", to_string(method)},
                          {"nmax", seq.terms.empty() ? 0 : seq.terms.size() - 1},
                          {"terms", terms_json(seq.terms)}};
      os << j.dump(2) << "\n";
      break;
    }
    case Format::bfile:
      os << "# w_" << seq.r << "(n): 123-avoiding words with " << seq.r << " copies of each letter 1..n\n";
      os << "# offset 0: the first line is n = 0, where the empty word gives w_" << seq.r << "(0) = 1\n";
      for (std::size_t n = 0; n < seq.terms.size(); ++n) os << n << " " << seq.terms[n].get_str() << "\n";
      break;
  }
  return os.str();
}

std::string render_scheme(const scheme::AlgebraicScheme& scheme, Format format) {
  if (format == Format::json) return scheme.to_json().dump(2) + "\n";
  if (format == Format::bfile) throw InvalidArgument("b-file output applies to sequences only");
  return scheme.pretty();
}

bool EliminationOutcome::passed() const {
  if (!annihilates) return false;
  if (!published) return true;
  return published_annihilates.value_or(false) && match && match->verdict != elimination::MatchVerdict::mismatch;
}

nlohmann::json EliminationOutcome::to_json() const {
  nlohmann::json j = {{"schema", "w123.elimination/1"},
                      {"r", r},
                      {"backend", elimination::to_string(backend)},
                      {"raw", algebra::to_json(raw)},
                      {"equation", algebra::to_json(equation)},
                      {"degree_x", equation.degree_x()},
                      {"degree_F", equation.degree_f()},
                      {"series_cutoff", cutoff},
                      {"annihilates_series", annihilates},
                      {"passed", passed()}};
  if (published) {
    j["published"] = {{"annihilates_series", *published_annihilates},
                      {"verdict", elimination::to_string(match->verdict)}};
    if (match->quotient) j["published"]["quotient"] = algebra::to_json(*match->quotient);
  }
  return j;
}

std::string EliminationOutcome::to_text() const {
  std::ostringstream os;
  os << "r = " << r << ", backend " << elimination::to_string(backend) << "\n";
  os << "P(x, F) = " << equation.to_string() << "\n";
  os << "degrees: x " << equation.degree_x() << ", F " << equation.degree_f() << "\n";
  os << "annihilates the series mod x^" << cutoff << ": " << (annihilates ? "yes" : "no") << "\n";
  if (published) {
    os << "shipped equation annihilates the series mod x^" << cutoff << ": "
       << (*published_annihilates ? "yes" : "no") << "\n";
    os << "verdict against the shipped equation: " << elimination::to_string(match->verdict) << "\n";
    if (match->quotient) os << "extra factor: " << match->quotient->to_string() << "\n";
  } else {
    os << "no shipped equation for this r\n";
  }
  return os.str();
}

EliminationOutcome run_elimination(const Context& ctx, unsigned r, elimination::Backend backend,
                                   double timeout_seconds) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  EliminationOutcome out;
  out.r = r;
  out.backend = backend;
  CacheKey key{"equation", r, {{"backend", elimination::to_string(backend)}}};
  std::optional<nlohmann::json> hit = ctx.cache ? ctx.cache->load(key) : std::nullopt;
  if (hit) {
    out.raw = algebra::polynomial_from_json(hit->at("raw"));
  } else {
    elimination::EliminationOptions opts{backend, Deadline::after(timeout_seconds)};
    out.raw = elimination::eliminate(scheme::build_scheme(r), opts);
    if (ctx.cache) ctx.cache->store(key, {{"raw", algebra::to_json(out.raw)}});
  }
  out.equation = elimination::compress_exponents(out.raw, r);
  out.published = elimination::published_equation(r);

  std::size_t need = 2 * (out.equation.degree_x() + out.equation.degree_f());
  if (out.published) need = std::max<std::size_t>(need, 2 * (out.published->degree_x() + out.published->degree_f()));
  out.cutoff = std::max<std::size_t>(61, need);
  auto series = count_terms(ctx, r, static_cast<unsigned>(out.cutoff - 1), CountMethod::scheme).as_series();
  out.annihilates = elimination::verify_annihilation(out.equation, series);
  if (out.published) {
    out.published_annihilates = elimination::verify_annihilation(*out.published, series);
    out.match = elimination::match_published_equation(out.equation, *out.published);
  }
  return out;
}

bool GuessOutcome::passed() const { return recurrence.has_value() && matches_published.value_or(true); }

nlohmann::json GuessOutcome::to_json() const {
  nlohmann::json j = {{"schema", "w123.recurrence/1"},
                      {"r", r},
                      {"bounds", {{"max_order", max_order}, {"max_degree", max_degree}}},
                      {"terms_used", terms_used},
                      {"found", recurrence.has_value()},
                      {"passed", passed()}};
  if (recurrence) {
    j["recurrence"] = recurrence->to_json();
    j["status"] = "empirically verified on all terms used";
  }
  if (matches_published) j["matches_published"] = *matches_published;
  return j;
}

std::string GuessOutcome::to_text() const {
  std::ostringstream os;
  os << "r = " << r << ", order <= " << max_order << ", degree <= " << max_degree << ", " << terms_used
     << " terms\n";
  if (!recurrence) {
    os << "no recurrence found within the bounds\n";
    return os.str();
  }
  os << "order " << recurrence->order() << ", degree " << recurrence->degree()
     << " (empirically verified on all terms used)\n";
  os << recurrence->to_string() << "\n";
  if (matches_published) os << "matches the shipped recurrence: " << (*matches_published ? "yes" : "no") << "\n";
  return os.str();
}

std::optional<LinearRecurrence> known_recurrence(const Context& ctx, unsigned r) {
  if (auto rec = guessing::published_recurrence(r)) return rec;
  if (ctx.cache)
    if (auto hit = ctx.cache->load(registry_key(r))) return LinearRecurrence::from_json(*hit);
  return std::nullopt;
}

GuessOutcome run_guess(const Context& ctx, unsigned r, unsigned max_order, unsigned max_degree) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  GuessOutcome out;
  out.r = r;
  out.max_order = max_order;
  out.max_degree = max_degree;
  out.terms_used = guessing::required_terms(max_order, max_degree) + 20;
  CacheKey key{"recurrence", r, {{"max_order", max_order}, {"max_degree", max_degree}}};
  std::optional<nlohmann::json> hit = ctx.cache ? ctx.cache->load(key) : std::nullopt;
  if (hit) {
    if (!hit->at("recurrence").is_null()) out.recurrence = LinearRecurrence::from_json(hit->at("recurrence"));
  } else {
    auto seq = count_terms(ctx, r, static_cast<unsigned>(out.terms_used - 1), CountMethod::scheme);
    out.recurrence = guessing::guess_recurrence(seq.terms, max_order, max_degree);
    if (ctx.cache) {
      ctx.cache->store(key, {{"recurrence", out.recurrence ? out.recurrence->to_json() : nlohmann::json()}});
      if (out.recurrence) ctx.cache->store(registry_key(r), out.recurrence->to_json());
    }
  }
  if (auto pub = guessing::published_recurrence(r); pub && out.recurrence) out.matches_published = (*pub == *out.recurrence);
  return out;
}

AsymptoticsOutcome run_asymptotics(const Context& ctx, unsigned r, unsigned nmax, double tolerance) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (tolerance < 0) throw InvalidArgument("tolerance must be nonnegative");
  CacheKey key{"report", r, {{"nmax", nmax}, {"tolerance", tolerance}}};
  if (ctx.cache)
    if (auto hit = ctx.cache->load(key))
      return {hit->at("json"), hit->at("text").get<std::string>(), hit->at("json").at("growth").at("passed").get<bool>()};

  auto rec = known_recurrence(ctx, r);
  if (!rec) {
    auto guess = run_guess(ctx, r);
    if (!guess.recurrence)
      throw NotAvailable("no recurrence found for r = " + std::to_string(r) + " within the default bounds");
    rec = guess.recurrence;
  }
  const unsigned check = std::max<unsigned>(rec->order() + 30, 40);
  auto head = count_terms(ctx, r, check, CountMethod::scheme).terms;
  if (!guessing::verify_recurrence(*rec, head))
    throw DefectError("recurrence for r = " + std::to_string(r) + " disagrees with the scheme terms");
  auto terms = guessing::extend_with_recurrence(*rec, std::span(head).first(rec->order()), nmax);
  auto report = asymptotics::analyze(r, terms, tolerance);
  AsymptoticsOutcome out{report.to_json(), report.to_table(), report.passed};
  if (ctx.cache) ctx.cache->store(key, {{"json", out.json}, {"text", out.text}});
  return out;
}

}  // namespace w123::service
