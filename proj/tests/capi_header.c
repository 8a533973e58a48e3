/* Compiled as C to keep the public header C-clean. */
#include "crsym/crsym.h"

int capi_header_c_status_count(void) { return (int)CRSYM_FINDING + 1; }
