/* The public header must compile as C. */
#include "beurling/beurling.h"

int capi_c_roundtrip(void) {
  bl_params* p = NULL;
  double gamma = 0.0;
  if (bl_params_create(0.5, 2, &p) != BL_OK) return -1;
  bl_params_gamma(p, 2, &gamma);
  bl_params_destroy(p);
  return gamma > 54.0 && gamma < 55.0;
}
