"""Testes das classes de conjugação e dos índices centralizantes."""
import pytest

from src.arith.functions import divisors, lcm
from src.classes.geometry import (
    build_class_table,
    centralizer,
    centralizing_subgroup_index,
    class_count_in,
    conjugacy_classes,
    integral_class_count,
    split_count,
    subgroup_class_count,
)
from src.groups.cosets import unique_intermediate_subgroup
from src.groups.permutation import parse_cycles
from tests.conftest import load_structure


def _class_of(table, cycles_text):
    g = parse_cycles(cycles_text, table.cs.group.degree)
    for cls in table.classes:
        if g in cls.members:
            return cls
    raise AssertionError(f"classe de {cycles_text} não encontrada")


class TestConjugacyClasses:
    def test_s4_class_sizes(self, s4_a4):
        sizes = sorted(cls.size for cls in conjugacy_classes(s4_a4.group))
        assert sizes == [1, 3, 6, 6, 8]

    def test_representative_is_minimum(self, s4_a4):
        for cls in conjugacy_classes(s4_a4.group):
            assert cls.representative == min(cls.members)

    def test_centralizer(self, s4_a4):
        g = parse_cycles("(1 2)", 4)
        assert centralizer(s4_a4.group, g).order == 4
        with pytest.raises(ValueError):
            centralizer(s4_a4.group, parse_cycles("(1 2)", 5))

    def test_centralizing_index(self, s4_a4):
        assert centralizing_subgroup_index(s4_a4, parse_cycles("(1 2 3)", 4)) == 1
        assert centralizing_subgroup_index(s4_a4, parse_cycles("(1 2)(3 4)", 4)) == 2
        assert centralizing_subgroup_index(s4_a4, s4_a4.group.identity) == 2


class TestClassTable:
    def test_s4_a4_counts(self, s4_a4):
        table = build_class_table(s4_a4)
        assert table.N == {(1, 1): 1, (1, 2): 2, (2, 2): 2}
        assert table.T == {1: 3, 2: 2}
        assert table.S == {1: 3, 2: 5}
        assert table.S_star == {1: 4, 2: 5}

    def test_annotations(self, s4_a4):
        table = build_class_table(s4_a4)
        four_cycles = _class_of(table, "(1 2 3 4)")
        assert (four_cycles.coset_order, four_cycles.centralizing_index) == (2, 2)
        three_cycles = _class_of(table, "(1 2 3)")
        assert (three_cycles.coset_order, three_cycles.centralizing_index) == (1, 1)

    def test_trivial_group(self, trivial):
        table = build_class_table(trivial)
        assert table.N == {(1, 1): 1}
        assert table.T == table.S == table.S_star == {1: 1}

    def test_whole_group_as_subgroup(self):
        cs = load_structure("s3_s3.txt")
        table = build_class_table(cs)
        assert cs.n == 1
        assert table.N == {(1, 1): 3}

    def test_totals(self, corpus_structure):
        _, cs = corpus_structure
        table = build_class_table(cs)
        assert table.S[cs.n] == table.S_star[cs.n] == len(table.classes)
        assert sum(cls.size for cls in table.classes) == cs.group.order
        for cls in table.classes:
            assert cls.centralizing_index % cls.coset_order == 0


class TestSplitting:
    def test_three_cycles_split_in_a4(self, s4_a4):
        table = build_class_table(s4_a4)
        three_cycles = _class_of(table, "(1 2 3)")
        assert split_count(s4_a4, three_cycles, 1) == 2
        assert split_count(s4_a4, three_cycles, 2) == 1

    def test_class_outside_intermediate_subgroup(self, s4_a4):
        table = build_class_table(s4_a4)
        with pytest.raises(ValueError):
            split_count(s4_a4, _class_of(table, "(1 2)"), 1)

    def test_integral_classes(self, s4_a4):
        A4 = s4_a4.subgroup
        assert integral_class_count(s4_a4.group, A4, A4.elements) == 2
        assert subgroup_class_count(A4) == 4
        assert subgroup_class_count(unique_intermediate_subgroup(s4_a4, 2)) == 5

    def test_region_must_be_union_of_classes(self, s4_a4):
        region = [parse_cycles("(1 2 3)", 4)]
        with pytest.raises(ValueError):
            integral_class_count(s4_a4.group, s4_a4.subgroup, region)
        with pytest.raises(ValueError):
            class_count_in(s4_a4.group, region)

    def test_class_count_in_coset(self, s4_a4):
        assert class_count_in(s4_a4.group, s4_a4.cosets[1]) == 2

    def test_split_count_matches_centralizing_index(self, corpus_structure):
        _, cs = corpus_structure
        table = build_class_table(cs)
        for cls in table.classes:
            for j in divisors(cs.n):
                if j % cls.coset_order:
                    continue
                assert split_count(cs, cls, j) == cs.n // lcm(j, cls.centralizing_index), (cls.representative, j)
