#include <stdio.h>
#include "unitary_radon.h"

int main(void) {
    const char *json = "{\"n\":2,\"terms\":[{\"alpha\":[1,0],\"beta\":[0,0],\"re\":1,\"im\":0}]}";
    UrPolynomial *p = NULL, *d = NULL;
    char *text = NULL;
    if (ur_polynomial_parse(json, &p) != UR_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", ur_last_error());
        return 1;
    }
    if (ur_ball_dual(p, &d) != UR_STATUS_OK || ur_polynomial_to_json(d, &text) != UR_STATUS_OK) {
        fprintf(stderr, "dual: %s\n", ur_last_error());
        return 1;
    }
    printf("%s\n", text);
    ur_string_free(text);
    ur_polynomial_free(d);
    ur_polynomial_free(p);
    return 0;
}
