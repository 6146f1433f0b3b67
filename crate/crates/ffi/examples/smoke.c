#include <stdio.h>
#include "gla.h"

int main(void) {
    GlaAlgebra *g = NULL;
    if (gla_algebra_from_registry("heis3", &g) != GLA_STATUS_OK) {
        fprintf(stderr, "%s\n", gla_last_error());
        return 1;
    }
    size_t dims[8], len = 0;
    bool finite = false;
    GlaStatus s = gla_prolongation_dims(g, 4, dims, 8, &len, &finite);
    if (s != GLA_STATUS_OK) {
        fprintf(stderr, "%s\n", gla_last_error());
        gla_algebra_free(g);
        return 1;
    }
    printf("levels=%zu finite=%d\n", len, finite);
    gla_algebra_free(g);
    return 0;
}
