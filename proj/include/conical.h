/* C interface to the conical measure-geometry library.
 *
 * Conventions: every function returns a status code (CD_OK on success);
 * outputs go through pointers. Strings returned via char** are owned by the
 * caller and must be released with cd_free_string. Handles are opaque and
 * released with their matching free function. cd_last_error() describes the
 * most recent failure on the calling thread.
 */
#ifndef CONICAL_H
#define CONICAL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CD_OK 0
#define CD_PREDICATE_FAILED 1 /* a verify/demo acceptance predicate is false */
#define CD_ERR_USAGE 2        /* invalid arguments or configuration */
#define CD_ERR_INTERNAL 3

typedef struct cd_system cd_system;

typedef struct cd_system_info {
  int dimension;
  size_t map_count;
  double ball_center[3];
  double ball_radius;
  int exact; /* 1 when rational mirrors are available */
} cd_system_info;

typedef struct cd_bound {
  double lower;
  double upper;
  long unresolved_cells;
  double unresolved_mass;
} cd_bound;

/* "cantor13", "unit-interval", "prop43:<lambda>,<p>" */
int cd_system_preset(const char* spec, cd_system** out);
/* key=value description file (map.<i>.ratio, map.<i>.translation, ...) */
int cd_system_from_file(const char* path, cd_system** out);
void cd_system_free(cd_system* sys);
int cd_system_info_get(const cd_system* sys, cd_system_info* out);

/* weight of the cylinder named by a digit string like "121" */
int cd_cylinder_weight(const cd_system* sys, const char* word, double* out);

/* enclosure of the coded point: center (dimension entries) and radius */
int cd_point_enclosure(const cd_system* sys, const char* word, double* center, double* radius);

/* certified bounds for mu(B(x,r)) of the system's self-similar measure */
int cd_measure_ball(const cd_system* sys, const double* x, double r, int depth_cap,
                    cd_bound* out);

/* Run a named subcommand (gen-samples, ratios, dims, conical-dims,
 * runlength, packing-demo, sharpness, grid-measure, cone-search, verify)
 * with key=value configuration text ('#' comments allowed). On success or
 * predicate failure, *csv and *summary receive the artifacts. */
int cd_run(const char* subcommand, const char* config, char** csv, char** summary);

/* Run acceptance experiment "E1".."E11" or "all" with the given seed. */
int cd_verify(const char* experiment, uint64_t seed, char** csv, char** summary);

void cd_free_string(char* s);

/* Message for the last failing call on this thread; empty string if none. */
const char* cd_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CONICAL_H */
