#include <stdio.h>
#include <string.h>

#include "chvlab.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    ChvMatrix *m = NULL;
    CHECK(chv_matrix_from_json("{\"n\":2,\"entries\":[[\"1\",\"2\"],[\"3\",\"4\"]]}", &m) == CHV_STATUS_OK);
    char *det = NULL;
    CHECK(chv_matrix_det(m, &det) == CHV_STATUS_OK);
    CHECK(strcmp(det, "-2") == 0);
    chv_string_free(det);
    chv_matrix_free(m);

    ChvFamily *f = NULL;
    CHECK(chv_family_generate("conjugated-diagonal", 3, 2, 7, false, 5, &f) == CHV_STATUS_OK);
    ChvReport *r = NULL;
    CHECK(chv_verify_phillips(f, &r) == CHV_STATUS_OK);
    ChvReportStatus s;
    CHECK(chv_report_status(r, &s) == CHV_STATUS_OK);
    CHECK(s == CHV_REPORT_STATUS_PASS);
    chv_report_free(r);
    chv_family_free(f);

    CHECK(chv_matrix_from_json("{\"n\":2}", &m) == CHV_STATUS_PARSE);
    char *msg = chv_last_error();
    CHECK(msg != NULL);
    chv_string_free(msg);
    puts("ok");
    return 0;
}
