import json

import pytest

from conftest import GOLDEN
from gammaq.arquiver import (
    ARQuiver,
    Coord,
    PathKind,
    RaySide,
    build,
    build_coxeter,
    build_hooks,
    chi_reindex,
    from_json,
    kappa_sigma,
    long_root_failures,
    maximal_sectional_paths,
    pair_side,
    pairs_of,
    rays,
    serialize,
    simple_root_position,
    to_json,
)
from gammaq.errors import BadRoot, NotAPair, NotAVertex
from gammaq.rootsys import DynkinQuiverA, Segment, all_quivers, parse_quiver, root


def names(roots):
    return [str(r) for r in roots]


class TestBuilders:
    def test_golden(self, ar_ex):
        assert {tuple(c): (r.a, r.b) for c, r in ar_ex.root_at.items()} == GOLDEN

    def test_hooks_golden(self, q_ex):
        assert {tuple(c): (r.a, r.b) for c, r in build_hooks(q_ex).root_at.items()} == GOLDEN

    def test_simple_root_positions(self, q_ex):
        got = [tuple(simple_root_position(q_ex, k)) for k in range(1, 6)]
        assert got == [(1, 0), (4, -5), (3, 0), (1, -4), (1, -6)]

    def test_single_vertex(self):
        ar = build(parse_quiver(1, "", 3))
        assert dict(ar.root_at) == {Coord(1, 3): root(1)}
        assert ar.arrows == frozenset()

    def test_linear_simple_roots(self):
        ar = build(parse_quiver(3, "<<"))
        for k in range(1, 4):
            assert ar.phi_inv(root(k)) == (3, 2 - 2 * (3 - k))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_builders_agree(self, n):
        for q in all_quivers(n):
            assert build_coxeter(q) == build_hooks(q)

    def test_hooks_builder_never_uses_tau(self, q_ex, monkeypatch):
        import gammaq.arquiver as mod

        def boom(*a, **k):
            raise AssertionError("tau called")

        monkeypatch.setattr(mod, "tau", boom)
        monkeypatch.setattr(mod, "gamma_theta_m", boom)
        build_hooks(q_ex)

    def test_arrows(self, ar_ex):
        assert (Coord(2, -1), Coord(1, 0)) in ar_ex.arrows
        assert len(ar_ex.arrows) == 20
        for s, t in ar_ex.arrows:
            assert abs(s.i - t.i) == 1 and t.p == s.p + 1

    @pytest.mark.parametrize("n", range(2, 7))
    def test_even_shift_translates(self, n):
        for q in all_quivers(n):
            base = build(q)
            moved = build(DynkinQuiverA(n, q.orientation, q.xi1 + 4))
            assert {Coord(c.i, c.p + 4): r for c, r in base.root_at.items()} == dict(moved.root_at)


class TestLookup:
    def test_phi(self, ar_ex):
        assert ar_ex.phi((1, 0)) == root(1)
        assert ar_ex.phi_inv(root(2, 5)) == (3, -4)

    def test_not_a_vertex(self, ar_ex):
        with pytest.raises(NotAVertex):
            ar_ex.phi((2, -7))

    def test_bad_root(self, ar_ex):
        with pytest.raises(BadRoot):
            ar_ex.phi_inv(root(2, 6))

    def test_paths(self, ar_ex):
        assert ar_ex.has_path(root(1, 3), root(1))
        assert not ar_ex.has_path(root(1), root(1, 3))
        assert not ar_ex.has_path(root(3), root(1)) and not ar_ex.has_path(root(1), root(3))


class TestSectional:
    def test_s5(self, ar_ex):
        s5 = [sp for sp in maximal_sectional_paths(ar_ex, PathKind.S) if sp.shared == 5][0]
        assert names(s5.roots) == ["[5]", "[4,5]", "[2,5]", "[1,5]", "[3,5]"]
        assert s5.length == 4

    def test_n1(self, ar_ex):
        n1 = [sp for sp in maximal_sectional_paths(ar_ex, "N") if sp.shared == 1][0]
        assert names(n1.roots) == ["[1]", "[1,3]", "[1,4]", "[1,5]", "[1,2]"]
        assert n1.length == 4

    def test_trivial(self):
        ar = build(parse_quiver(1, ""))
        for kind in PathKind:
            (sp,) = maximal_sectional_paths(ar, kind)
            assert sp.length == 0

    @pytest.mark.parametrize("n", range(1, 9))
    def test_census(self, n):
        for q in all_quivers(n):
            ar = build(q)
            for kind in PathKind:
                paths = maximal_sectional_paths(ar, kind)
                assert sorted(sp.shared for sp in paths) == list(range(1, n + 1))
                for sp in paths:
                    assert all((r.a if kind is PathKind.N else r.b) == sp.shared for r in sp.roots)
                    assert sp.length == (n - sp.shared if kind is PathKind.N else sp.shared - 1)


class TestKappaSigma:
    def test_example(self, ar_ex):
        kappa, sigma = kappa_sigma(ar_ex)
        assert names(kappa) == ["[1]", "[2,3]", "[4]", "[5]"]
        assert names(sigma) == ["[1,2]", "[3,5]"]

    def test_trivial(self):
        assert kappa_sigma(build(parse_quiver(1, ""))) == ((root(1),), (root(1),))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_long_root_corrected(self, n):
        for q in all_quivers(n):
            assert long_root_failures(build(q)) == []

    def test_printed_long_root_fails_on_example(self, ar_ex):
        assert long_root_failures(ar_ex, printed=True) == [
            "position_from_row_1",
            "position_from_row_n",
            "kappa_length",
            "sigma_length",
        ]


class TestChi:
    def test_example(self, ar_ex):
        assert chi_reindex(ar_ex) == ((1, 3, 4, 5, 2), (3, 1, 2, 4, 5))

    def test_printed_sign_reverses(self, ar_ex):
        assert chi_reindex(ar_ex, "printed") == ((2, 5, 4, 3, 1), (3, 1, 2, 4, 5))

    def test_trivial(self):
        assert chi_reindex(build(parse_quiver(1, ""))) == ((1,), (1,))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_linear_j_tuple(self, n):
        ar = build(parse_quiver(n, "<" * (n - 1)))
        assert chi_reindex(ar)[1] == tuple(range(n, 0, -1))


class TestRays:
    def test_upper_lower(self, ar_ex):
        up, low = rays(ar_ex, root(1, 4))
        assert names(up.roots) == ["[4]", "[2,4]", "[1,4]", "[1,3]", "[1]"]
        assert names(low.roots) == ["[1,2]", "[1,5]", "[1,4]", "[3,4]"]

    def test_pairs_of_1_5(self, ar_ex):
        prs = pairs_of(ar_ex, root(1, 5))
        assert len(prs) == 4
        assert {(str(p.alpha), str(p.beta), p.side) for p in prs} == {
            ("[1]", "[2,5]", RaySide.UPPER),
            ("[1,3]", "[4,5]", RaySide.UPPER),
            ("[1,4]", "[5]", RaySide.UPPER),
            ("[3,5]", "[1,2]", RaySide.LOWER),
        }
        for p in prs:
            assert ar_ex.has_path(root(1, 5), p.alpha)

    def test_simple_root_has_no_pairs(self, ar_ex):
        assert pairs_of(ar_ex, root(3)) == []

    def test_pair_side(self, ar_ex):
        assert pair_side(ar_ex, root(1, 2), root(3, 4)).side is RaySide.LOWER
        with pytest.raises(NotAPair):
            pair_side(ar_ex, root(1), root(3))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_every_split_on_exactly_one_ray(self, n):
        for q in all_quivers(n):
            ar = build(q)
            for g in ar.root_at.values():
                prs = pairs_of(ar, g)
                assert len(prs) == g.height - 1
                for p in prs:
                    ia, ib, ig = (ar.phi_inv(r).i for r in (p.alpha, p.beta, g))
                    if p.side is RaySide.UPPER:
                        assert ia + ib == ig
                    else:
                        assert (n + 1 - ia) + (n + 1 - ib) == n + 1 - ig


class TestSerialize:
    def test_json_contains_golden_vertex(self, ar_ex):
        text = to_json(ar_ex)
        assert '{"i":4,"p":-3,"root":[1,5]}' in text
        obj = json.loads(text)
        assert obj["orientation"] == "><>>" and obj["xi"] == [0, -1, 0, -1, -2]
        assert [(v["i"], v["p"]) for v in obj["vertices"]] == sorted(GOLDEN)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_round_trip(self, n):
        for q in all_quivers(n, xi1=1):
            ar = build(q)
            text = to_json(ar)
            back = from_json(text)
            assert back == ar and to_json(back) == text

    def test_dot(self, ar_ex):
        dot = serialize(ar_ex, "dot")
        assert dot.startswith("digraph") and "rankdir=LR" in dot
        assert '"4_-3" [label="[1,5]"];' in dot
        assert '"2_-1" -> "1_0";' in dot

    def test_ascii(self, ar_ex):
        lines = serialize(ar_ex, "ascii").splitlines()
        assert len(lines) == 6
        assert lines[1].split()[1:] == ["[5]", "[4]", "[2,3]", "[1]"]
        assert lines[5].split()[1:] == ["[1,2]", "[3,5]"]

    def test_ascii_single(self):
        assert "[1]" in serialize(build(parse_quiver(1, "")), "ascii")

    def test_unknown_format(self, ar_ex):
        with pytest.raises(ValueError):
            serialize(ar_ex, "png")
