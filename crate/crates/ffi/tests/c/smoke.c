#include <stdio.h>
#include <string.h>

#include "rsk_reverse.h"

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    RskPermutation *w = NULL;
    CHECK(rsk_permutation_parse("52314", &w) == RSK_STATUS_OK);
    CHECK(rsk_permutation_len(w) == 5);

    RskTableau *p = NULL, *q = NULL;
    CHECK(rsk_insertion_recording(w, &p, &q) == RSK_STATUS_OK);
    char *json = NULL;
    CHECK(rsk_tableau_to_json(q, &json) == RSK_STATUS_OK);
    CHECK(strcmp(json, "{\"rows\":[[1,3,5],[2],[4]]}") == 0);
    rsk_string_free(json);

    bool in_r = false;
    CHECK(rsk_is_in_r(w, &in_r) == RSK_STATUS_OK && in_r);

    RskPermutation *lifted = NULL;
    CHECK(rsk_phi(w, 1, 7, &lifted) == RSK_STATUS_OK);
    uint32_t buf[7];
    size_t len = 0;
    CHECK(rsk_permutation_entries(lifted, buf, 7, &len) == RSK_STATUS_OK && len == 7);
    const uint32_t expected[7] = {1, 6, 3, 4, 2, 5, 7};
    CHECK(memcmp(buf, expected, sizeof expected) == 0);
    CHECK(rsk_permutation_entries(lifted, buf, 3, &len) == RSK_STATUS_BUFFER_TOO_SMALL && len == 7);

    uint64_t count = 0;
    CHECK(rsk_count_r(7, 2, &count) == RSK_STATUS_OK && count == 160);

    RskPermutation *bad = NULL;
    CHECK(rsk_permutation_parse("1 1 2", &bad) == RSK_STATUS_INVALID_ARGUMENT);
    CHECK(bad == NULL);
    CHECK(rsk_last_error_message() != NULL);

    rsk_permutation_free(lifted);
    rsk_tableau_free(p);
    rsk_tableau_free(q);
    rsk_permutation_free(w);
    puts("ok");
    return 0;
}
