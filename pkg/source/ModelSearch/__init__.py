from source.ModelSearch.Search import (
    SearchTask, SearchResult, PartialContext, FORCING, PARTIAL_LAWS, MAX_SINGLE_SIZE, MAX_DOUBLE_SIZE,
    ModelStream, enumerate_models, naive_enumerate, search_subtrees, search_top, merge_results,
)
from source.ModelSearch.Workers import parallel_enumerate, parallel_subtrees, worker_count
from source.ModelSearch.Classification import Region, classify, verify_intersection
