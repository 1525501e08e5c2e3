/*
 * Copyright 2026 The antiniven Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libantiniven.
 *
 * Every integer argument is a decimal string so callers can pass values of
 * any size; apart from bases, "B^E" (e.g. "10^7") is accepted too. Operations return an an_status and, on success, a result handle
 * that must be released with an_result_free(). On failure *out is set to
 * NULL and an_last_error() describes the problem (per thread).
 */

#ifndef ANTINIVEN_H
#define ANTINIVEN_H

#if defined(ANTINIVEN_BUILDING_LIBRARY)
#define ANTINIVEN_API __attribute__((visibility("default")))
#else
#define ANTINIVEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum an_status {
  AN_OK = 0,
  AN_ERR_USAGE = 1,     /* malformed integer, base, or identifier */
  AN_ERR_DOMAIN = 2,    /* precondition or hypothesis violated */
  AN_ERR_RESOURCE = 3,  /* value would exceed the bit-length cap */
  AN_ERR_BUDGET = 4,    /* search or factorization budget exhausted */
  AN_ERR_CANCELLED = 5,
  AN_ERR_INTERNAL = 6   /* failed post-verification or safety guard */
} an_status;

typedef enum an_format { AN_FORMAT_PLAIN = 0, AN_FORMAT_JSON = 1, AN_FORMAT_CSV = 2 } an_format;

typedef struct an_config an_config;
typedef struct an_result an_result;

ANTINIVEN_API const char* an_version(void);
ANTINIVEN_API const char* an_status_name(an_status status);
ANTINIVEN_API const char* an_last_error(void);

/* Options shared by the long-running operations. A NULL config means
 * defaults: all hardware threads, 2^26-bit cap, 32 witnesses. */
ANTINIVEN_API an_config* an_config_new(void);
ANTINIVEN_API void an_config_free(an_config* config);
ANTINIVEN_API void an_config_set_threads(an_config* config, unsigned threads);
ANTINIVEN_API an_status an_config_set_bit_cap(an_config* config, unsigned long long bits);
ANTINIVEN_API an_status an_config_set_witness_cap(an_config* config, unsigned cap);
/* Include per-term (term, digit sum, gcd) rows in construction output. */
ANTINIVEN_API void an_config_set_audit(an_config* config, int enabled);
/* Serialize integers above 10^5 bits as sparse base-b digit lists. */
ANTINIVEN_API void an_config_set_structural(an_config* config, int enabled);
/* Conjecture "4.4" only: search b-Niven instead of b-anti-Niven progressions. */
ANTINIVEN_API void an_config_set_niven_reading(an_config* config, int enabled);
/* Asks running constructions that use this config to stop at their next
 * phase boundary. Safe to call from another thread. */
ANTINIVEN_API void an_config_request_stop(an_config* config);

ANTINIVEN_API an_status an_check(const char* n, const char* base, an_result** out);
ANTINIVEN_API an_status an_scan(const an_config* config, const char* base, const char* step, const char* from,
                                const char* to, an_result** out);
ANTINIVEN_API an_status an_bound(const char* base, const char* step, an_result** out);
/* theorem: "thm2.2", "thm2.4", "thm3.2", "thm3.3", "thm3.5", "thm4.1" or
 * "thm4.2". Optional arguments may be NULL: length (thm2.4), index k of an
 * infinite family (thm3.2, thm3.3, thm3.5; default 1), start and step
 * (thm2.2). */
ANTINIVEN_API an_status an_construct(const an_config* config, const char* theorem, const char* base,
                                     const char* length, const char* index, const char* start, const char* step,
                                     an_result** out);
ANTINIVEN_API an_status an_density(const an_config* config, const char* base, const char* limit, an_result** out);
/* id: "4.3" or "4.4". */
ANTINIVEN_API an_status an_conjecture(const an_config* config, const char* id, const char* base, const char* step,
                                      const char* to, an_result** out);
/* Rebuilds a result from any JSON report this library produced. */
ANTINIVEN_API an_status an_parse_report(const char* json, an_result** out);

/* "check", "scan", "bound", "construction", "member", "density" or
 * "conjecture". */
ANTINIVEN_API const char* an_result_kind(const an_result* result);
/* The returned text is owned by the result and stays valid until the next
 * render call on it or an_result_free(). NULL on failure. */
ANTINIVEN_API const char* an_result_render(an_result* result, an_format format);
/* check: 1 if anti-Niven; conjecture: 1 if a witness was found; else 1. */
ANTINIVEN_API int an_result_flag(const an_result* result);
ANTINIVEN_API void an_result_free(an_result* result);

#ifdef __cplusplus
}
#endif

#endif /* ANTINIVEN_H */
