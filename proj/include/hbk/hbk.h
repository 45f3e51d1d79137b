// Copyright 2026 The hbk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the hbk library. All results are UTF-8 text (JSON unless
 * the context's format is "text", SVG for plots) owned by an hbk_result. */
#ifndef HBK_H
#define HBK_H

#if defined(HBK_BUILDING_LIBRARY)
#define HBK_API __attribute__((visibility("default")))
#else
#define HBK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hbk_context hbk_context;
typedef struct hbk_result hbk_result;

typedef enum {
  HBK_OK = 0,
  HBK_E_ARGUMENT = 1,     /* null pointer, bad option or value */
  HBK_E_DOMAIN = 2,       /* input outside the mathematical domain */
  HBK_E_UNSUPPORTED = 3,  /* valid input the library does not handle */
  HBK_E_RESOURCE = 4,     /* a resource guard tripped */
  HBK_E_INVARIANT = 5,    /* internal consistency check failed */
  HBK_E_INTERNAL = 6
} hbk_status;

enum {
  HBK_KERNEL_GAMMA = 1,
  HBK_KERNEL_STURM = 2,
  HBK_KERNEL_DWORK = 4,
  HBK_KERNEL_VERIFY_PF3 = 8,
  HBK_KERNEL_CLOSED_FORM = 16
};

enum { HBK_LOCUS_CHECK_DISC = 1, HBK_LOCUS_SINGULAR_POINTS = 2, HBK_LOCUS_GROUP_LAW = 4 };

HBK_API const char* hbk_version(void);
HBK_API const char* hbk_status_string(hbk_status s);

HBK_API hbk_status hbk_context_create(hbk_context** out);
HBK_API void hbk_context_destroy(hbk_context* ctx);
/* Same keys as the config file, e.g. ("terms", "40"). */
HBK_API hbk_status hbk_context_set(hbk_context* ctx, const char* key, const char* value);
HBK_API hbk_status hbk_context_load_config(hbk_context* ctx, const char* path);
/* The effective configuration in config-file syntax. */
HBK_API const char* hbk_context_config(hbk_context* ctx);
/* Message of the last failed call on this context; "" if none. */
HBK_API const char* hbk_context_error(const hbk_context* ctx);

/* c_0..c_terms of the diagonal (or deformed) period sequence. oracle != 0
 * uses the constant-term oracle, subject to max_support. */
HBK_API hbk_status hbk_period(hbk_context* ctx, int N, int terms, int deformed, int oracle, hbk_result** out);
HBK_API hbk_status hbk_guess(hbk_context* ctx, int N, int deformed, hbk_result** out);
/* r may be NULL; with deformed != 0 and r set, the operator is specialized. */
HBK_API hbk_status hbk_monodromy(hbk_context* ctx, int N, int deformed, const char* r, hbk_result** out);
HBK_API hbk_status hbk_mirror(hbk_context* ctx, int N, int terms, int deformed, hbk_result** out);
/* scale < 0: no rescaling; otherwise a_d / d^scale is reported too. */
HBK_API hbk_status hbk_yukawa(hbk_context* ctx, int N, int terms, int deformed, int scale, hbk_result** out);
HBK_API hbk_status hbk_kernel(hbk_context* ctx, int N, int orders, unsigned flags, hbk_result** out);
/* multi = number of summed variables beyond x (2 for the plane curve). */
HBK_API hbk_status hbk_locus(hbk_context* ctx, int N, int multi, unsigned flags, hbk_result** out);
HBK_API hbk_status hbk_grouplaw(hbk_context* ctx, int N, hbk_result** out);
/* eps is a rational literal such as "1" or "-1000" or "1/10". */
HBK_API hbk_status hbk_plot(hbk_context* ctx, int N, const char* eps, hbk_result** out);
/* criterion 0 runs all. */
HBK_API hbk_status hbk_verify(hbk_context* ctx, int criterion, int include_n9, hbk_result** out);
/* Fixture digests in MANIFEST syntax. */
HBK_API hbk_status hbk_fixture_manifest(hbk_context* ctx, hbk_result** out);

HBK_API const char* hbk_result_text(const hbk_result* r);
/* 1 if every check carried by the result passed (always 1 for plain data). */
HBK_API int hbk_result_ok(const hbk_result* r);
HBK_API void hbk_result_destroy(hbk_result* r);

#ifdef __cplusplus
}
#endif

#endif /* HBK_H */
