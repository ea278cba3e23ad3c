#include "conical.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "conical/refinable.hpp"
#include "conical/runner.hpp"
#include "conical/symbolic.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
int guarded(F&& f) {
  try {
    int rc = f();
    if (rc == CD_OK) g_last_error.clear();
    return rc;
  } catch (const std::invalid_argument& e) {
    return fail(CD_ERR_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(CD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CD_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

struct cd_system {
  conical::sym::SelfSimilarSystem sys;
};

extern "C" {

int cd_system_preset(const char* spec, cd_system** out) {
  return guarded([&] {
    if (!spec || !out) throw std::invalid_argument("null argument");
    *out = new cd_system{conical::sym::parse_preset(spec)};
    return CD_OK;
  });
}

int cd_system_from_file(const char* path, cd_system** out) {
  return guarded([&] {
    if (!path || !out) throw std::invalid_argument("null argument");
    *out = new cd_system{conical::sym::load_system(path)};
    return CD_OK;
  });
}

void cd_system_free(cd_system* sys) { delete sys; }

int cd_system_info_get(const cd_system* sys, cd_system_info* out) {
  return guarded([&] {
    if (!sys || !out) throw std::invalid_argument("null argument");
    out->dimension = sys->sys.n;
    out->map_count = sys->sys.kappa();
    for (int i = 0; i < 3; ++i)
      out->ball_center[i] = i < sys->sys.n ? sys->sys.ball_center[i] : 0.0;
    out->ball_radius = sys->sys.ball_radius;
    out->exact = sys->sys.exact ? 1 : 0;
    return CD_OK;
  });
}

int cd_cylinder_weight(const cd_system* sys, const char* word, double* out) {
  return guarded([&] {
    if (!sys || !word || !out) throw std::invalid_argument("null argument");
    *out = conical::sym::cylinder_weight(sys->sys, conical::sym::SymbolWord::from_string(word));
    return CD_OK;
  });
}

int cd_point_enclosure(const cd_system* sys, const char* word, double* center, double* radius) {
  return guarded([&] {
    if (!sys || !word || !center || !radius) throw std::invalid_argument("null argument");
    auto e =
        conical::sym::point_enclosure(sys->sys, conical::sym::SymbolWord::from_string(word));
    for (int i = 0; i < sys->sys.n; ++i) center[i] = e.center[i];
    *radius = e.radius;
    return CD_OK;
  });
}

int cd_measure_ball(const cd_system* sys, const double* x, double r, int depth_cap,
                    cd_bound* out) {
  return guarded([&] {
    if (!sys || !x || !out) throw std::invalid_argument("null argument");
    conical::ref::SelfSimilarMeasure meas(sys->sys);
    conical::geom::Vec c;
    c.n = sys->sys.n;
    for (int i = 0; i < c.n; ++i) c[i] = x[i];
    auto b = conical::ref::measure_region(meas, conical::geom::ConeRegion{{c, r}}, depth_cap);
    out->lower = b.lower;
    out->upper = b.upper;
    out->unresolved_cells = b.unresolved_cells;
    out->unresolved_mass = b.unresolved_mass;
    return CD_OK;
  });
}

int cd_run(const char* subcommand, const char* config, char** csv, char** summary) {
  return guarded([&] {
    if (!subcommand) throw std::invalid_argument("null subcommand");
    auto r = conical::run::run(subcommand, config ? config : "");
    if (csv) {
      *csv = dup_string(r.csv);
      if (!*csv) throw std::bad_alloc();
    }
    if (summary) {
      *summary = dup_string(r.summary);
      if (!*summary) throw std::bad_alloc();
    }
    if (r.status == 1) return fail(CD_PREDICATE_FAILED, "acceptance predicate failed");
    if (r.status == 2) return fail(CD_ERR_USAGE, "usage error");
    return CD_OK;
  });
}

int cd_verify(const char* experiment, uint64_t seed, char** csv, char** summary) {
  std::string cfg = "experiment=" + std::string(experiment ? experiment : "all") +
                    "\nseed=" + std::to_string(seed) + "\n";
  return cd_run("verify", cfg.c_str(), csv, summary);
}

void cd_free_string(char* s) { std::free(s); }

const char* cd_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
