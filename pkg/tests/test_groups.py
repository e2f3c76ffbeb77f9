"""Testes do núcleo de grupos: permutações, leitura de especificações e classes laterais."""
from itertools import combinations

import pytest

from src.arith.functions import divisors, totient
from src.groups.cosets import (
    build_coset_structure,
    representative_coset,
    unique_intermediate_subgroup,
)
from src.groups.errors import (
    GroupSpecError,
    GroupTooLargeError,
    NotNormalError,
    NotSubgroupError,
    QuotientNotCyclicError,
    SubgroupNotInGroupError,
)
from src.groups.finite_group import FiniteGroup, enumerate_elements, power_map
from src.groups.parser import GroupSpecReader, parse_group_spec, read_spec_name
from src.groups.permutation import (
    conjugate,
    format_cycles,
    inverse,
    multiply,
    order,
    parse_cycles,
    power,
)
from tests.conftest import CORPUS_FILES, spec_text


class TestPermutation:
    def test_parse_and_format(self):
        p = parse_cycles("(1 2 3)", 3)
        assert p == (1, 2, 0)
        assert format_cycles(p) == "(1 2 3)"
        assert format_cycles(parse_cycles("()", 4)) == "()"
        assert format_cycles(parse_cycles("(3 4)(1 2)", 4)) == "(1 2)(3 4)"

    def test_product_applies_left_factor_first(self):
        p = parse_cycles("(1 2)", 3)
        q = parse_cycles("(2 3)", 3)
        assert format_cycles(multiply(p, q)) == "(1 3 2)"

    def test_power_order_inverse(self):
        p = parse_cycles("(1 2 3 4)(5 6)", 6)
        assert order(p) == 4
        assert power(p, 4) == tuple(range(6))
        assert power(p, -1) == inverse(p)
        assert multiply(p, inverse(p)) == tuple(range(6))

    def test_conjugate(self):
        g = parse_cycles("(1 2)", 4)
        t = parse_cycles("(1 2 3 4)", 4)
        assert format_cycles(conjugate(g, t)) == "(2 3)"

    @pytest.mark.parametrize("text", ["(1 2", "1 2", "(1 a)", "(1 2 5)", "(1 2)(2 3)", "(0 1)", "(1 ²)", "(1 ٣)"])
    def test_malformed_cycles(self, text):
        with pytest.raises(GroupSpecError):
            parse_cycles(text, 4)


class TestParser:
    def test_reader_sections(self):
        sections = GroupSpecReader().read(spec_text("s4_a4.txt"))
        assert sections["degree"] == "4"
        assert sections["name"] == "S4 / A4"
        assert [text for _, text in sections["generators"]] == ["(1 2)", "(1 2 3 4)"]
        assert len(sections["subgroup"]) == 2

    def test_parse_s4_a4(self):
        G, H = parse_group_spec(spec_text("s4_a4.txt"))
        assert (G.order, H.order) == (24, 12)

    def test_name_line(self):
        assert read_spec_name(spec_text("f21_c7.txt")) == "F21 / C7"
        assert read_spec_name("degree: 2\ngenerators:\nsubgroup:\n") is None

    def test_trivial_group(self):
        G, H = parse_group_spec(spec_text("trivial.txt"))
        assert G.order == H.order == 1

    def test_malformed_point(self):
        with pytest.raises(GroupSpecError, match="Linha 4"):
            parse_group_spec(spec_text("malformed.txt"))

    @pytest.mark.parametrize("text", [
        "degree: x\ngenerators:\nsubgroup:\n",
        "degree: 3\n(1 2)\n",
        "degree: 3\ndegree: 3\n",
    ])
    def test_bad_documents(self, text):
        with pytest.raises(GroupSpecError):
            parse_group_spec(text)

    def test_subgroup_generator_outside_group(self):
        text = "degree: 4\ngenerators:\n(1 2 3 4)\nsubgroup:\n(1 2)\n"
        with pytest.raises(SubgroupNotInGroupError):
            parse_group_spec(text)

    def test_order_cap(self):
        with pytest.raises(GroupTooLargeError):
            parse_group_spec(spec_text("s4_a4.txt"), order_cap=10)


class TestFiniteGroup:
    @pytest.mark.parametrize("name,order", [
        ("s4_a4.txt", 24), ("d12_c6.txt", 12), ("q8_i.txt", 8), ("dic3_c3.txt", 12),
        ("f20_c5.txt", 20), ("f21_c7.txt", 21), ("a4_v4.txt", 12),
    ])
    def test_corpus_orders(self, name, order):
        G, _ = parse_group_spec(spec_text(name))
        assert G.order == order

    def test_elements_in_canonical_order(self):
        G = enumerate_elements(3, [parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
        assert list(G.elements) == sorted(G.elements)
        assert G.elements[0] == G.identity

    def test_from_sympy_keeps_elements(self):
        G = enumerate_elements(4, [parse_cycles("(1 2 3 4)", 4)])
        rebuilt = FiniteGroup.from_sympy(G.sympy_group)
        assert rebuilt.elements == G.elements
        assert rebuilt.degree == 4

    def test_subgroup_and_normality(self):
        G, H = parse_group_spec(spec_text("s4_a4.txt"))
        assert H.is_subgroup_of(G)
        assert H.is_normal_in(G)
        assert not G.is_subgroup_of(H)

    def test_generators_of_other_degree(self):
        with pytest.raises(GroupSpecError):
            enumerate_elements(4, [parse_cycles("(1 2)", 3)])

    def test_power_map(self):
        G = enumerate_elements(4, [parse_cycles("(1 2 3 4)", 4)])
        sigma = power_map(G, 3)
        assert sorted(sigma.values()) == list(G.elements)
        with pytest.raises(ValueError):
            power_map(G, 2)


class TestCosetStructure:
    def test_s4_a4_labels(self, s4_a4):
        assert s4_a4.n == 2
        assert s4_a4.cosets[0] == frozenset(s4_a4.subgroup.elements)
        assert len(s4_a4.cosets[1]) == 12

    def test_intermediate_subgroups(self, dic3_c3):
        assert dic3_c3.n == 4
        orders = {d: unique_intermediate_subgroup(dic3_c3, d).order for d in (1, 2, 4)}
        assert orders == {1: 3, 2: 6, 4: 12}
        assert len(representative_coset(dic3_c3, 4)) == 3
        with pytest.raises(ValueError):
            unique_intermediate_subgroup(dic3_c3, 3)

    def test_labels_are_a_homomorphism(self, f20_c5):
        cs = f20_c5
        for g in cs.group.elements[:8]:
            for h in cs.group.elements:
                assert cs.coset_of[multiply(g, h)] == (cs.coset_of[g] + cs.coset_of[h]) % cs.n

    @pytest.mark.parametrize("name", CORPUS_FILES)
    def test_corpus_hypotheses_hold(self, name):
        G, H = parse_group_spec(spec_text(name))
        cs = build_coset_structure(G, H)
        assert cs.n * H.order == G.order

    def test_not_normal(self):
        G, H = parse_group_spec(spec_text("s4_transposition.txt"))
        with pytest.raises(NotNormalError):
            build_coset_structure(G, H)

    def test_quotient_not_cyclic(self):
        G, H = parse_group_spec(spec_text("c3xs4_v4.txt"))
        with pytest.raises(QuotientNotCyclicError):
            build_coset_structure(G, H)

    def test_not_subgroup(self):
        G = enumerate_elements(4, [parse_cycles("(1 2 3 4)", 4)])
        K = enumerate_elements(4, [parse_cycles("(1 2)", 4)])
        with pytest.raises(NotSubgroupError):
            build_coset_structure(G, K)


def _coset_order(cs, e):
    g = min(cs.cosets[e])
    k = 1
    while power(g, k) not in cs.subgroup:
        k += 1
    return k


def _closed(elements):
    return all(multiply(x, y) in elements for x in elements for y in elements)


class TestQuotientCounting:
    def test_totient_many_cosets_of_each_order(self, corpus_structure):
        _, cs = corpus_structure
        for d in divisors(cs.n):
            labels = [e for e in range(cs.n) if _coset_order(cs, e) == d]
            assert len(labels) == totient(d)
            assert labels == cs.coset_labels_of_order(d)

    def test_intermediate_subgroup_is_unique(self, corpus_structure):
        _, cs = corpus_structure
        if cs.group.order > 100:
            pytest.skip("varredura de subgrupos só até ordem 100")
        found = {}
        others = list(range(1, cs.n))
        for size in range(len(others) + 1):
            for chosen in combinations(others, size):
                union = frozenset().union(cs.cosets[0], *(cs.cosets[e] for e in chosen))
                if _closed(union):
                    found.setdefault(len(chosen) + 1, []).append(union)
        assert sorted(found) == list(divisors(cs.n))
        for d in divisors(cs.n):
            assert found[d] == [frozenset(unique_intermediate_subgroup(cs, d).elements)]
