/* The public header compiles as C99 and the library links from C. */
#include <stdio.h>
#include <string.h>

#include "wondermodels.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(void) {
  wm_context* ctx = NULL;
  wm_graph* g = NULL;
  char* out = NULL;
  int64_t coeffs[8];
  size_t len = 0;
  int equal = 0;

  EXPECT(wm_context_new(&ctx) == WM_OK);
  EXPECT(wm_graph_parse("path:3", &g) == WM_OK);

  EXPECT(wm_poincare_coeffs(ctx, g, WM_SIDE_TORIC, coeffs, 8, &len) == WM_OK);
  EXPECT(len == 3 && coeffs[0] == 1 && coeffs[1] == 5 && coeffs[2] == 1);

  EXPECT(wm_verify_iso(ctx, g, &out, &equal) == WM_OK);
  EXPECT(equal == 1);
  EXPECT(out != NULL && strstr(out, "\"equal\":true") != NULL);
  wm_string_free(out);

  EXPECT(wm_lec(ctx, "3,1,2", &out) == WM_OK);
  EXPECT(out != NULL && strstr(out, "\"lec\":2") != NULL);
  wm_string_free(out);

  EXPECT(wm_graph_parse("nonsense", NULL) == WM_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(wm_last_error()) > 0);

  wm_graph_free(g);
  wm_context_free(ctx);
  if (failures == 0) printf("C API smoke test passed\n");
  return failures == 0 ? 0 : 1;
}
