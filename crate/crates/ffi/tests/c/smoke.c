#include <stdio.h>
#include <string.h>
#include "ascfs.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    AscfsGraph *g = NULL;
    CHECK(ascfs_graph_parse("4 4\n0 1\n1 2\n2 3\n0 3\n", &g) == ASCFS_STATUS_OK);
    CHECK(ascfs_graph_vertex_count(g) == 4);
    CHECK(ascfs_graph_edge_count(g) == 4);

    AscfsAsReport as;
    CHECK(ascfs_is_as(g, &as) == ASCFS_STATUS_OK);
    CHECK(as.verdict && as.blocks_examined == 1);

    AscfsCfsReport cfs;
    CHECK(ascfs_is_cfs(g, &cfs) == ASCFS_STATUS_OK);
    CHECK(cfs.verdict && cfs.support_size == 4);

    AscfsCoxeterLabel label;
    CHECK(ascfs_coxeter_label(g, &label) == ASCFS_STATUS_OK);
    CHECK(label == ASCFS_COXETER_LABEL_NONTRIVIAL_JOIN);

    char *text = NULL;
    CHECK(ascfs_graph_write(g, &text) == ASCFS_STATUS_OK);
    CHECK(strncmp(text, "4 4\n", 4) == 0);
    ascfs_string_free(text);
    ascfs_graph_free(g);

    CHECK(ascfs_graph_parse("3 1\n0 0\n", &g) == ASCFS_STATUS_PARSE);
    CHECK(ascfs_last_error_message() != NULL);

    double t;
    CHECK(ascfs_threshold(ASCFS_THRESHOLD_KIND_AS, 1, &t) == ASCFS_STATUS_DOMAIN);
    CHECK(ascfs_threshold(ASCFS_THRESHOLD_KIND_AS, 1000, &t) == ASCFS_STATUS_OK);
    CHECK(t > 0.19 && t < 0.191);
    puts("ok");
    return 0;
}
