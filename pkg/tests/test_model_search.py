import pytest

from source.CoreAlgebra import FiniteAlgebra, check_properties_a, check_sbci_derived, check_sbck
from source.ErrorHandling import PreconditionViolation, SizeCapExceeded, UnknownSystemError
from source.ModelSearch import (
    ModelStream, Region, SearchTask, classify, enumerate_models, merge_results, naive_enumerate, parallel_enumerate,
    parallel_subtrees, search_subtrees, search_top, verify_intersection, worker_count,
)


def _keys(result):
    return [alg.sort_key() for alg in result.models]


class TestSearchTask:
    def test_needs_a_required_system(self):
        with pytest.raises(PreconditionViolation):
            SearchTask(2, ())

    def test_unknown_system(self):
        with pytest.raises(UnknownSystemError):
            SearchTask(2, ("bci", "frobnicate"))

    def test_single_operation_cap(self):
        with pytest.raises(SizeCapExceeded):
            SearchTask(6, ("bci",))

    def test_two_operation_cap(self):
        assert SearchTask(5, ("bci",)).cap == 5
        with pytest.raises(SizeCapExceeded):
            SearchTask(5, ("sbci",))

    def test_top_out_of_range(self):
        with pytest.raises(PreconditionViolation):
            SearchTask(2, ("bci",), top=2)


class TestEnumeration:
    def test_one_element(self):
        result = enumerate_models(SearchTask(1, ("bci",)))
        assert result.count == 1
        assert result.models[0] == FiniteAlgebra(size=1, top=0, arrow=[[0]])

    @pytest.mark.parametrize("require", [("bci",), ("bck",), ("bci", "implicative")])
    def test_pruned_matches_naive_single(self, require):
        task = SearchTask(2, require)
        assert _keys(enumerate_models(task)) == _keys(naive_enumerate(task))

    @pytest.mark.parametrize("require", [("sbci",), ("pbci",), ("sbci", "pbci")])
    def test_pruned_matches_naive_double(self, require):
        task = SearchTask(2, require)
        assert _keys(enumerate_models(task)) == _keys(naive_enumerate(task))

    def test_forbid(self):
        every = enumerate_models(SearchTask(2, ("sbci",)))
        split = enumerate_models(SearchTask(2, ("sbci",), forbid=("pbci",)))
        assert 0 < split.count < every.count
        assert all(classify(alg) is Region.SBCI_ONLY for alg in split.models)

    def test_fixed_top(self):
        result = enumerate_models(SearchTask(2, ("bci",), top=1))
        assert result.count > 0
        assert all(alg.top == 1 for alg in result.models)

    def test_limit_keeps_the_first_models(self):
        full = enumerate_models(SearchTask(3, ("bci",)))
        limited = enumerate_models(SearchTask(3, ("bci",), limit=2))
        assert _keys(limited) == _keys(full)[:2]
        assert not limited.exhaustive

    def test_merge_is_order_independent(self):
        task = SearchTask(2, ("bci",))
        results = [search_top(task, top) for top in task.tops]
        assert _keys(merge_results(task, results)) == _keys(merge_results(task, reversed(results)))

    def test_pruning_happens(self):
        assert enumerate_models(SearchTask(3, ("bci",))).pruned > 0

    def test_worker_count(self):
        assert worker_count(1, 4) == 1
        assert worker_count(8, 1) == 1

    @pytest.mark.slow
    def test_parallel_matches_sequential(self):
        task = SearchTask(3, ("bci",))
        assert _keys(parallel_enumerate(task, 2)) == _keys(enumerate_models(task))

    @pytest.mark.slow
    def test_pruned_matches_naive_at_three(self):
        task = SearchTask(3, ("bci",))
        assert enumerate_models(task).count == naive_enumerate(task).count


class TestClassification:
    def test_sbci_only(self, sbci_not_pbci):
        assert classify(sbci_not_pbci) is Region.SBCI_ONLY

    def test_godel_fodor_chain(self, godel_fodor):
        assert classify(godel_fodor) is Region.SBCI_ONLY

    def test_equal_tables(self, two_chain):
        assert classify(two_chain.replace(double_arrow=two_chain.arrow)) is Region.BCI

    def test_needs_two_operations(self, two_chain):
        with pytest.raises(PreconditionViolation):
            classify(two_chain)

    @pytest.mark.parametrize("size", [1, 2])
    def test_intersection(self, size):
        report = verify_intersection(size)
        assert report.passed
        assert report.facts["violations"] == 0
        assert report.facts["checked"] >= 1

    @pytest.mark.slow
    def test_intersection_at_three(self):
        report = verify_intersection(3)
        assert report.passed
        assert report.facts["violations"] == 0


class TestTheoremSanity:
    @pytest.mark.parametrize("size", [1, 2, 3])
    def test_every_small_sbci_model_satisfies_the_derived_laws(self, size):
        result = enumerate_models(SearchTask(size, ("sbci",)))
        assert result.count > 0
        for alg in result.models:
            assert check_sbci_derived(alg).passed

    def test_bci_models_that_are_not_bck_fail_sbck(self):
        result = enumerate_models(SearchTask(3, ("bci",), forbid=("bck",)))
        assert result.count > 0
        for alg in result.models:
            assert not check_sbck(alg).passed

    @pytest.mark.slow
    def test_every_bci_model_satisfies_properties_a(self):
        for size in (1, 2, 3):
            for alg in enumerate_models(SearchTask(size, ("bci",))).models:
                assert check_properties_a(alg).passed


class TestModelStream:
    @pytest.mark.parametrize("limit", [0, 1, 5])
    def test_batches_concatenate_to_the_merged_models(self, limit):
        task = SearchTask(3, ("bci",), limit=limit)
        stream = ModelStream(task, search_subtrees(task))
        streamed = []
        while (batch := stream.next_batch()) is not None:
            streamed.extend(batch)
        assert [alg.sort_key() for alg in streamed] == _keys(enumerate_models(task))
        assert _keys(stream.result()) == _keys(enumerate_models(task))

    def test_limit_stops_before_the_later_subtrees(self):
        task = SearchTask(3, ("bci",), limit=1)
        visited = []

        def subtrees():
            for top in task.tops:
                visited.append(top)
                yield search_top(task, top)

        stream = ModelStream(task, subtrees())
        while stream.next_batch() is not None:
            pass
        stream.close()
        assert stream.result().count == 1
        assert len(visited) < len(task.tops)

    def test_subtrees_come_in_top_order(self):
        task = SearchTask(3, ("bci",))
        results = list(parallel_subtrees(task, 1))
        assert len(results) == len(task.tops)
        for top, result in zip(task.tops, results):
            assert all(alg.top == top for alg in result.models)
