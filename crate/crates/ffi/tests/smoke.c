#include <stdio.h>
#include <string.h>
#include "homhopf.h"

int main(void) {
    HhHopf *h = NULL;
    if (hh_hopf_from_catalog("h4-sweedler-twisted", &h) != HH_STATUS_OK) return 10;
    if (hh_hopf_dim(h) != 4) return 11;
    char *report = NULL;
    if (hh_hopf_check(h, &report) != HH_STATUS_OK) return 12;
    if (strstr(report, "\"passed\":true") == NULL) return 13;
    hh_string_free(report);

    HhDouble *d = NULL;
    if (hh_double_new(h, 0, &d) != HH_STATUS_OK) return 14;
    if (hh_double_dim(d) != 16) return 15;
    hh_double_free(d);

    HhHopf *bad = NULL;
    if (hh_hopf_from_catalog("missing", &bad) != HH_STATUS_UNKNOWN_STRUCTURE) return 16;
    if (hh_last_error() == NULL) return 17;
    hh_hopf_free(h);
    printf("ok\n");
    return 0;
}
