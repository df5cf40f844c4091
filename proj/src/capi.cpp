#include "gincoh/gincoh.h"

#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <string>

#include "gincoh/acceptance.hpp"
#include "gincoh/cache.hpp"
#include "gincoh/error.hpp"
#include "gincoh/io.hpp"
#include "gincoh/oracles.hpp"
#include "gincoh/seqcm.hpp"
#include "gincoh/simplicial.hpp"

using gincoh::Error;
using gincoh::ErrorCode;
using gincoh::io::json;

struct gincoh_context {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_dir;
  std::string last_error;

  std::uint64_t current_seed() {
    if (!seed) {
      std::random_device rd;
      seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    return *seed;
  }
};

struct gincoh_ideal {
  gincoh::PolynomialIdeal ideal;
};

struct gincoh_complex {
  gincoh::SimplicialComplex complex;
};

namespace {

// Raised inside a call whose report was produced but records a violation;
// the report is still handed to the caller.
struct ReportedViolation {
  std::string message;
};

gincoh_status status_of(ErrorCode code) { return static_cast<gincoh_status>(static_cast<int>(code)); }

template <class F>
gincoh_status guarded(gincoh_context* ctx, F&& body) {
  if (ctx == nullptr) return GINCOH_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return GINCOH_OK;
  } catch (const ReportedViolation& v) {
    ctx->last_error = v.message;
    return GINCOH_E_INCONSISTENT;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    ctx->last_error = e.what();
    return GINCOH_E_PARSE;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return GINCOH_E_CAPACITY;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return GINCOH_E_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown exception";
    return GINCOH_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) { *out = copy_string(j.dump(2)); }

std::optional<gincoh::Window> window_of(const gincoh_window* w) {
  if (w == nullptr) return std::nullopt;
  if (w->lo > w->hi) throw Error(ErrorCode::kInvalidArgument, "window lower end exceeds upper end");
  return gincoh::Window{w->lo, w->hi};
}

const gincoh::MonomialIdeal& monomial_or_throw(const gincoh::PolynomialIdeal& ideal, const char* route,
                                               std::optional<gincoh::MonomialIdeal>& holder) {
  if (!ideal.is_monomial())
    throw Error(ErrorCode::kInvalidArgument, std::string("route ") + route + " needs a monomial ideal");
  holder = ideal.as_monomial();
  return *holder;
}

// A strongly stable ideal is used as is; anything else is replaced by its gin.
struct StableSubject {
  gincoh::MonomialIdeal ideal;
  bool is_gin = false;
  std::optional<gincoh::GinResult> gin;
};

StableSubject stable_subject(gincoh_context* ctx, const gincoh::PolynomialIdeal& ideal) {
  if (ideal.is_monomial()) {
    gincoh::MonomialIdeal m = ideal.as_monomial();
    if (gincoh::is_strongly_stable(m)) return {std::move(m), false, std::nullopt};
  }
  gincoh::GinResult g = gincoh::cached_gin(ideal, ctx->current_seed(), ctx->cache_dir);
  gincoh::MonomialIdeal m = g.ideal;
  return {std::move(m), true, std::move(g)};
}

void attach_subject(json& j, const StableSubject& s) {
  j["subject"] = s.is_gin ? "gin" : "input";
  if (s.gin) {
    j["gin"] = gincoh::io::to_json(s.gin->ideal);
    j["seed"] = s.gin->seed;
  }
}

json localcoh_of_ideal(gincoh_context* ctx, const gincoh::PolynomialIdeal& ideal, gincoh_route route,
                       const gincoh_window* window) {
  const auto w = window_of(window);
  std::optional<gincoh::MonomialIdeal> holder;
  switch (route) {
    case GINCOH_ROUTE_FILTRATION: {
      const StableSubject s = stable_subject(ctx, ideal);
      const gincoh::Window win = w.value_or(gincoh::default_cohomology_window(s.ideal));
      json out = {{"route", "filtration"}, {"table", gincoh::io::to_json(gincoh::local_cohomology_strongly_stable(s.ideal, win))}};
      attach_subject(out, s);
      return out;
    }
    case GINCOH_ROUTE_CECH: {
      const auto& m = monomial_or_throw(ideal, "cech", holder);
      const gincoh::Window win = w.value_or(gincoh::default_cohomology_window(m));
      return {{"route", "cech"}, {"table", gincoh::io::to_json(gincoh::oracles::cech_local_cohomology(m, win))}};
    }
    case GINCOH_ROUTE_ENRICO:
    case GINCOH_ROUTE_ENRICO_PRINTED: {
      const auto& m = monomial_or_throw(ideal, "enrico", holder);
      const gincoh::SimplicialComplex complex = gincoh::complex_of(m);
      const gincoh::Window win = w.value_or(gincoh::default_cohomology_window(m));
      const auto conv = route == GINCOH_ROUTE_ENRICO ? gincoh::EnricoConvention::kVerified
                                                      : gincoh::EnricoConvention::kPrinted;
      json out = gincoh::io::to_json(gincoh::local_cohomology_enrico(complex, win, conv));
      out["route"] = "enrico";
      return out;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown route " + std::to_string(static_cast<int>(route)));
}

}  // namespace

extern "C" {

const char* gincoh_version(void) { return gincoh::kVersion; }

const char* gincoh_status_name(gincoh_status status) {
  if (status == GINCOH_OK) return "OK";
  if (status < GINCOH_E_PARSE || status > GINCOH_E_INTERNAL) return "E_UNKNOWN";
  // error_code_name returns views of string literals.
  return gincoh::error_code_name(static_cast<ErrorCode>(status)).data();
}

gincoh_status gincoh_context_new(gincoh_context** out) {
  if (out == nullptr) return GINCOH_E_INVALID_ARGUMENT;
  *out = new (std::nothrow) gincoh_context();
  return *out ? GINCOH_OK : GINCOH_E_CAPACITY;
}

void gincoh_context_free(gincoh_context* ctx) { delete ctx; }

const char* gincoh_last_error(const gincoh_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

gincoh_status gincoh_context_set_seed(gincoh_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->seed = seed; });
}

gincoh_status gincoh_context_get_seed(gincoh_context* ctx, uint64_t* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = ctx->current_seed();
  });
}

gincoh_status gincoh_context_set_cache_dir(gincoh_context* ctx, const char* dir) {
  return guarded(ctx, [&] {
    if (dir == nullptr || *dir == '\0')
      ctx->cache_dir.reset();
    else
      ctx->cache_dir = dir;
  });
}

gincoh_status gincoh_ideal_from_json(gincoh_context* ctx, const char* text, gincoh_ideal** out) {
  return guarded(ctx, [&] {
    require(text, "json");
    require(out, "out");
    *out = new gincoh_ideal{gincoh::io::ideal_from_json(gincoh::io::parse_json(text))};
  });
}

gincoh_status gincoh_ideal_to_json(gincoh_context* ctx, const gincoh_ideal* ideal, char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    emit(out, gincoh::io::to_json(ideal->ideal));
  });
}

void gincoh_ideal_free(gincoh_ideal* ideal) { delete ideal; }

gincoh_status gincoh_complex_from_json(gincoh_context* ctx, const char* text, gincoh_complex** out) {
  return guarded(ctx, [&] {
    require(text, "json");
    require(out, "out");
    *out = new gincoh_complex{gincoh::io::complex_from_json(gincoh::io::parse_json(text))};
  });
}

gincoh_status gincoh_complex_to_json(gincoh_context* ctx, const gincoh_complex* complex, char** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    emit(out, gincoh::io::to_json(complex->complex));
  });
}

void gincoh_complex_free(gincoh_complex* complex) { delete complex; }

gincoh_status gincoh_complex_ideal(gincoh_context* ctx, const gincoh_complex* complex, gincoh_ideal** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    *out = new gincoh_ideal{
        gincoh::PolynomialIdeal::from_monomial(gincoh::stanley_reisner_ideal(complex->complex))};
  });
}

gincoh_status gincoh_ideal_complex(gincoh_context* ctx, const gincoh_ideal* ideal, gincoh_complex** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    if (!ideal->ideal.is_monomial())
      throw Error(ErrorCode::kNotSquarefree, "only squarefree monomial ideals have a simplicial complex");
    *out = new gincoh_complex{gincoh::complex_of(ideal->ideal.as_monomial())};
  });
}

gincoh_status gincoh_gin(gincoh_context* ctx, const gincoh_ideal* ideal, char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    bool hit = false;
    const gincoh::GinResult g = gincoh::cached_gin(ideal->ideal, ctx->current_seed(), ctx->cache_dir, &hit);
    json j = gincoh::io::to_json(g, ideal->ideal);
    j["cache_key"] = gincoh::gin_cache_key(ideal->ideal, g.seed);
    emit(out, j);
  });
}

gincoh_status gincoh_hilbert(gincoh_context* ctx, const gincoh_ideal* ideal, gincoh_window window, char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    const gincoh::Window w = *window_of(&window);
    const gincoh::MonomialIdeal m =
        ideal->ideal.is_monomial() ? ideal->ideal.as_monomial() : gincoh::initial_ideal(ideal->ideal);
    json j = gincoh::io::to_json(gincoh::hilbert_function(m, w));
    j["n"] = ideal->ideal.ambient();
    emit(out, j);
  });
}

gincoh_status gincoh_betti_ideal(gincoh_context* ctx, const gincoh_ideal* ideal, int use_oracle, char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    const gincoh::PolynomialIdeal& p = ideal->ideal;
    gincoh::BettiTable table;
    std::string route = "koszul";
    if (p.is_monomial()) {
      const gincoh::MonomialIdeal m = p.as_monomial();
      if (use_oracle) {
        table = gincoh::oracles::koszul_betti(m);
      } else if (m.is_squarefree()) {
        table = gincoh::hochster_betti(gincoh::complex_of(m));
        route = "hochster";
      } else if (gincoh::is_strongly_stable(m)) {
        table = gincoh::eliahou_kervaire_betti(m);
        route = "eliahou-kervaire";
      } else {
        table = gincoh::oracles::koszul_betti(m);
      }
    } else {
      table = gincoh::oracles::koszul_betti(p);
    }
    json j = gincoh::io::to_json(table);
    j["route"] = route;
    emit(out, j);
  });
}

gincoh_status gincoh_betti_complex(gincoh_context* ctx, const gincoh_complex* complex, int use_oracle, char** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    json j = use_oracle ? gincoh::io::to_json(gincoh::oracles::koszul_betti(gincoh::stanley_reisner_ideal(complex->complex)))
                        : gincoh::io::to_json(gincoh::hochster_betti(complex->complex));
    j["route"] = use_oracle ? "koszul" : "hochster";
    emit(out, j);
  });
}

gincoh_status gincoh_localcoh_ideal(gincoh_context* ctx, const gincoh_ideal* ideal, gincoh_route route,
                                    const gincoh_window* window, char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    emit(out, localcoh_of_ideal(ctx, ideal->ideal, route, window));
  });
}

gincoh_status gincoh_localcoh_complex(gincoh_context* ctx, const gincoh_complex* complex, gincoh_route route,
                                      const gincoh_window* window, char** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    const auto w = window_of(window);
    if (route == GINCOH_ROUTE_ENRICO || route == GINCOH_ROUTE_ENRICO_PRINTED) {
      if (complex->complex.is_void()) throw Error(ErrorCode::kInvalidArgument, "the void complex has K[Delta] = 0");
      const gincoh::Window win =
          w.value_or(gincoh::default_cohomology_window(gincoh::stanley_reisner_ideal(complex->complex)));
      const auto conv = route == GINCOH_ROUTE_ENRICO ? gincoh::EnricoConvention::kVerified
                                                      : gincoh::EnricoConvention::kPrinted;
      json j = gincoh::io::to_json(gincoh::local_cohomology_enrico(complex->complex, win, conv));
      j["route"] = "enrico";
      emit(out, j);
      return;
    }
    const auto ideal = gincoh::PolynomialIdeal::from_monomial(gincoh::stanley_reisner_ideal(complex->complex));
    emit(out, localcoh_of_ideal(ctx, ideal, route, window));
  });
}

gincoh_status gincoh_filtration(gincoh_context* ctx, const gincoh_ideal* ideal, char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    const StableSubject s = stable_subject(ctx, ideal->ideal);
    json j = {{"filtration", gincoh::io::to_json(gincoh::dimension_filtration(s.ideal))}};
    attach_subject(j, s);
    emit(out, j);
  });
}

gincoh_status gincoh_dual(gincoh_context* ctx, const gincoh_complex* complex, gincoh_complex** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    *out = new gincoh_complex{gincoh::alexander_dual(complex->complex)};
  });
}

gincoh_status gincoh_shift(gincoh_context* ctx, const gincoh_complex* complex, char** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    const std::uint64_t seed = ctx->current_seed();
    json j = gincoh::io::to_json(gincoh::shifted_complex(complex->complex, seed));
    j["seed"] = seed;
    emit(out, j);
  });
}

gincoh_status gincoh_seqcm(gincoh_context* ctx, const gincoh_complex* complex, char** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    const std::uint64_t seed = ctx->current_seed();
    json j = gincoh::io::to_json(gincoh::is_sequentially_cm(complex->complex, seed));
    j["seed"] = seed;
    emit(out, j);
  });
}

gincoh_status gincoh_verify_main_theorem(gincoh_context* ctx, const gincoh_ideal* ideal, const gincoh_window* window,
                                         char** out) {
  return guarded(ctx, [&] {
    require(ideal, "ideal");
    require(out, "out");
    const std::uint64_t seed = ctx->current_seed();
    const gincoh::ComparisonReport report = gincoh::main_theorem_check(ideal->ideal, seed, window_of(window));
    json j = gincoh::io::to_json(report);
    j["seed"] = seed;
    emit(out, j);
    if (!report.sbarra_violations.empty())
      throw ReportedViolation{std::to_string(report.sbarra_violations.size()) +
                              " entries violate left <= right"};
  });
}

gincoh_status gincoh_verify_thm41(gincoh_context* ctx, const gincoh_complex* complex, const gincoh_window* window,
                                  char** out) {
  return guarded(ctx, [&] {
    require(complex, "complex");
    require(out, "out");
    const std::uint64_t seed = ctx->current_seed();
    const gincoh::Theorem41Report report = gincoh::theorem41_check(complex->complex, seed, window_of(window));
    json j = gincoh::io::to_json(report);
    j["seed"] = seed;
    emit(out, j);
    if (!report.comparison.sbarra_violations.empty())
      throw ReportedViolation{std::to_string(report.comparison.sbarra_violations.size()) +
                              " entries violate left <= right"};
  });
}

gincoh_status gincoh_verify_corpus(gincoh_context* ctx, const char* dir, char** out) {
  return guarded(ctx, [&] {
    require(dir, "dir");
    require(out, "out");
    const gincoh::AcceptanceReport report = gincoh::run_acceptance(dir, ctx->current_seed());
    emit(out, gincoh::to_json(report));
    if (!report.all_passed()) {
      std::string failed;
      for (const auto& c : report.criteria)
        if (!c.passed) failed += (failed.empty() ? "" : ", ") + std::to_string(c.id);
      throw ReportedViolation{"failed criteria: " + failed};
    }
  });
}

gincoh_status gincoh_render_tsv(gincoh_context* ctx, const char* text, char** out) {
  return guarded(ctx, [&] {
    require(text, "json");
    require(out, "out");
    const json j = gincoh::io::parse_json(text);
    const json* table = &j;
    if (j.is_object() && j.contains("table")) table = &j["table"];
    if (table->is_object() && table->contains("entries")) {
      *out = copy_string(gincoh::io::betti_tsv(gincoh::io::betti_from_json(*table)));
    } else if (table->is_object() && table->contains("modules")) {
      *out = copy_string(gincoh::io::cohomology_tsv(gincoh::io::cohomology_from_json(*table)));
    } else if (table->is_object() && table->contains("values") && table->contains("window")) {
      const gincoh::HilbertFunction h = gincoh::io::hilbert_from_json(*table);
      std::string s = "degree\tvalue\n";
      for (int d = h.window().lo; d <= h.window().hi; ++d) s += std::to_string(d) + "\t" + std::to_string(h.at(d)) + "\n";
      *out = copy_string(s);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "document holds no Betti, cohomology or Hilbert table");
    }
  });
}

void gincoh_string_free(char* s) { delete[] s; }

}  // extern "C"
