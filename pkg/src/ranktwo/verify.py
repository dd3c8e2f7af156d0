"""Batch verification driver.

Runs every check the library promises, over a weight range per algebra,
and assembles a machine-readable report:
    {"checks": [{"name", "params", "status", "millis"}, ...]}
Any FAIL makes the run unsuccessful.
"""

from __future__ import annotations

import time
from typing import Callable

from .algebras import ALPHA, BETA, Algebra, cartan_matrix
from .build import fundamental_poset, semistandard_poset
from .fixtures import load_fixture
from .grid import decompose, triangle_dual
from .lattice import (IdealLattice, check_structure, infer_structure_matrix,
                      order_ideals, piece_rank_stats, weight_via_decomposition)
from .poset import (are_edge_color_isomorphic, find_rank_function,
                    vertex_color_isomorphism)
from .weyl import (LaurentPoly2, QPoly, alternating_sum,
                   character_from_lattice, rgf_from_lattice, rgf_product,
                   verify_weyl_character)

ORDERS = ("beta_alpha", "alpha_beta")
SIMPLE = (Algebra.A2, Algebra.C2, Algebra.G2)

# Twelve-, eight- and six-term closed forms of the signed orbit sum of the
# Weyl vector, kept as independent literals to cross-check the generated one.
RHO_SUM_LITERAL = {
    Algebra.A2: LaurentPoly2({
        (1, 1): 1, (-1, 2): -1, (2, -1): -1, (-2, 1): 1, (1, -2): 1, (-1, -1): -1,
    }),
    Algebra.C2: LaurentPoly2({
        (1, 1): 1, (-1, 2): -1, (3, -1): -1, (-3, 2): 1,
        (3, -2): 1, (-3, 1): -1, (1, -2): -1, (-1, -1): 1,
    }),
    Algebra.G2: LaurentPoly2({
        (1, 1): 1, (-1, 2): -1, (4, -1): -1, (-4, 3): 1, (5, -2): 1, (-5, 3): -1,
        (5, -3): -1, (-5, 2): 1, (4, -3): 1, (-4, 1): -1, (1, -2): -1, (-1, -1): 1,
    }),
}


def quasi_gaussian_product(m: int) -> QPoly:
    """Five-factor closed form for the one-parameter second-weight family."""
    numerator = QPoly.one()
    for n in (m + 1, m + 2, 2 * m + 3, 3 * m + 4, 3 * m + 5):
        numerator = numerator * QPoly.one_minus_q_power(n)
    for d in (1, 2, 3, 4, 5):
        numerator = numerator.divide_exact(QPoly.one_minus_q_power(d))
    return numerator


def _weights_in_range(bound: tuple[int, int]):
    return [(a, b) for a in range(bound[0] + 1) for b in range(bound[1] + 1)]


def _lattice(algebra: Algebra, order: str, lam) -> IdealLattice:
    return order_ideals(semistandard_poset(algebra, order, lam))


class Verifier:
    def __init__(self, bound: tuple[int, int] = (3, 3)):
        self.bound = bound
        self.checks: list[dict] = []
        self._cache: dict = {}

    def lattice(self, algebra, order, lam) -> IdealLattice:
        key = (algebra, order, lam)
        if key not in self._cache:
            self._cache[key] = _lattice(algebra, order, lam)
        return self._cache[key]

    def run_check(self, name: str, params: str, fn: Callable[[], bool]) -> bool:
        start = time.perf_counter()
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failure with a diagnosis
            ok = False
            params = f"{params}; error: {exc}"
        millis = int((time.perf_counter() - start) * 1000)
        self.checks.append({
            "name": name,
            "params": params,
            "status": "PASS" if ok else "FAIL",
            "millis": millis,
        })
        return ok

    # -- criteria ---------------------------------------------------------

    def check_counts(self) -> bool:
        golden = [
            (Algebra.G2, "beta_alpha", (2, 2), 729),
            (Algebra.C2, "beta_alpha", (1, 1), 16),
        ]
        fundamental = {
            Algebra.A1A1: (2, 2), Algebra.A2: (3, 3),
            Algebra.C2: (4, 5), Algebra.G2: (7, 14),
        }
        counts: list[tuple[Callable[[], int], int]] = []
        for algebra, order, lam, count in golden:
            counts.append((lambda a=algebra, o=order, l=lam: len(_lattice(a, o, l)), count))
        for algebra, (na, nb) in fundamental.items():
            for which, n in (("alpha_fund", na), ("beta_fund", nb)):
                counts.append(
                    (lambda a=algebra, w=which: len(order_ideals(fundamental_poset(a, w))), n))
        for fn, expected in counts:
            start = time.perf_counter()
            if fn() != expected:
                return False
            if time.perf_counter() - start >= 1.0:  # each count individually fast
                return False
        return True

    def check_rgf(self) -> bool:
        start = time.perf_counter()
        sweep = [(g, lam) for g in Algebra for lam in _weights_in_range(self.bound)]
        sweep += [(Algebra.A2, (4, 4)), (Algebra.C2, (4, 4))]
        for algebra, lam in sweep:
            closed = rgf_product(algebra, lam)
            if not (closed.is_palindromic() and closed.is_unimodal()):
                return False
            for order in ORDERS:
                if rgf_from_lattice(self.lattice(algebra, order, lam)) != closed:
                    return False
        return (time.perf_counter() - start) < 60.0

    def check_weyl(self) -> bool:
        for algebra in SIMPLE:
            if alternating_sum(algebra, (1, 1)) != RHO_SUM_LITERAL[algebra]:
                return False
        sweep = [(g, lam) for g in Algebra for lam in _weights_in_range(self.bound)]
        sweep += [(Algebra.A2, (4, 4)), (Algebra.C2, (4, 4))]
        for algebra, lam in sweep:
            for order in ORDERS:
                chi = character_from_lattice(self.lattice(algebra, order, lam))
                if not verify_weyl_character(algebra, lam, chi):
                    return False
        return True

    def check_structure(self) -> bool:
        for algebra in Algebra:
            matrix = cartan_matrix(algebra)
            for lam in _weights_in_range(self.bound):
                for order in ORDERS:
                    lat = self.lattice(algebra, order, lam)
                    if not check_structure(lat, matrix):
                        return False
                    both_colors = len({c for _, _, c in lat.covers}) == 2
                    if both_colors and infer_structure_matrix(lat) != matrix:
                        return False
        bad = order_ideals(load_fixture("nonsplitting_grid"))
        return infer_structure_matrix(bad) is None


    def check_additivity(self) -> bool:
        for algebra in Algebra:
            for lam in _weights_in_range(self.bound):
                if lam[0] + lam[1] < 2:
                    continue
                for order in ORDERS:
                    sp = semistandard_poset(algebra, order, lam)
                    dec = decompose(sp.grid)
                    if len(dec) != lam[0] + lam[1]:
                        return False
                    lat = self.lattice(algebra, order, lam)
                    for i in range(len(lat)):
                        if weight_via_decomposition(lat, i, dec) != lat.weight(i):
                            return False
                        for color in (ALPHA, BETA):
                            stats = lat.rank_stats(i, color)
                            rho, length = piece_rank_stats(lat, i, dec, color)
                            if (stats.rho, stats.length) != (rho, length):
                                return False
        return True

    def check_tableaux(self) -> bool:
        from .tableaux import (enumerate_littelmann, enumerate_tableaux,
                               ideal_of_tableau, tableau_lattice,
                               tableau_of_ideal, tableauwt, to_littelmann,
                               wt_lit)

        for algebra in SIMPLE:
            for lam in _weights_in_range(self.bound):
                lat = self.lattice(algebra, "beta_alpha", lam)
                for i in range(len(lat)):
                    t = tableau_of_ideal(lat, i)
                    if ideal_of_tableau(algebra, lam, t) != lat.element_vertices(i):
                        return False
                    if tableauwt(algebra, t) != lat.weight(i):
                        return False
                tl = tableau_lattice(algebra, lam)
                if not are_edge_color_isomorphic(lat.edge_poset, tl.edge_poset):
                    return False
                tabs = enumerate_tableaux(algebra, lam)
                blocks = [to_littelmann(algebra, t) for t in tabs]
                if sorted(blocks) != sorted(enumerate_littelmann(algebra, lam)):
                    return False
                if any(wt_lit(algebra, u) != tableauwt(algebra, t)
                       for t, u in zip(tabs, blocks)):
                    return False
        return True

    def check_duality(self) -> bool:
        for algebra in Algebra:
            for lam in _weights_in_range(self.bound):
                pba = semistandard_poset(algebra, "beta_alpha", lam).grid
                pab = semistandard_poset(algebra, "alpha_beta", lam).grid
                phi = vertex_color_isomorphism(pab.base, triangle_dual(pba, algebra).base)
                if phi is None:
                    return False
                if not _induced_lattice_iso_ok(algebra, pba, pab, phi,
                                               self.lattice(algebra, "beta_alpha", lam),
                                               self.lattice(algebra, "alpha_beta", lam)):
                    return False
        for algebra in SIMPLE:
            for a in range(3):
                for b in range(3):
                    iso = are_edge_color_isomorphic(
                        self.lattice(algebra, "beta_alpha", (a, b)).edge_poset,
                        self.lattice(algebra, "alpha_beta", (a, b)).edge_poset)
                    if iso != (a == 0 or b == 0):
                        return False
        return True

    def check_quasi_gaussian(self) -> bool:
        for m in range(5):
            lat = self.lattice(Algebra.G2, "beta_alpha", (0, m))
            if rgf_from_lattice(lat) != quasi_gaussian_product(m):
                return False
        return True

    def check_warmups(self) -> bool:
        chain23 = order_ideals(load_fixture("chain_product_2x3"))
        if len(chain23) != 10:
            return False
        gaussian = QPoly.one_minus_q_power(4) * QPoly.one_minus_q_power(5)
        gaussian = gaussian.divide_exact(QPoly.one_minus_q_power(1))
        gaussian = gaussian.divide_exact(QPoly.one_minus_q_power(2))
        if rgf_from_lattice(chain23) != gaussian:
            return False
        rank = find_rank_function(chain23.edge_poset)
        if rank is None or rank.rank_sizes() != (1, 1, 2, 2, 2, 1, 1):
            return False
        return len(order_ideals(load_fixture("catalan_p3"))) == 14

    def run_all(self) -> dict:
        bound_text = f"a<={self.bound[0]}, b<={self.bound[1]}"
        self.run_check("counts", "golden lattice and fundamental sizes", self.check_counts)
        self.run_check("rgf_product_identity", f"{bound_text} plus (4,4) for a2/c2", self.check_rgf)
        self.run_check("weyl_character", f"{bound_text}, both orders, literal orbit sums", self.check_weyl)
        self.run_check("structure_condition", f"{bound_text} plus nonsplitting fixture", self.check_structure)
        self.run_check("additivity", f"{bound_text}, both colors, every element", self.check_additivity)
        self.run_check("tableau_suite", f"simple algebras, {bound_text}", self.check_tableaux)
        self.run_check("duality", f"{bound_text}; edge-color iso dichotomy a,b<=2", self.check_duality)
        self.run_check("quasi_gaussian", "second-weight family, m=0..4", self.check_quasi_gaussian)
        self.run_check("warmup_goldens", "chain product 2x3 and catalan posets", self.check_warmups)
        return {"checks": self.checks}


def _induced_lattice_iso_ok(algebra, pba, pab, phi, lat_ba: IdealLattice,
                            lat_ab: IdealLattice) -> bool:
    """Check that ideal complements along phi give an edge-colored iso
    from the alpha-beta lattice onto the recolored dual of the beta-alpha one.
    """
    all_ba = frozenset(pba.base.ids)
    mapping = {}
    for i in range(len(lat_ab)):
        image = all_ba - frozenset(phi[v] for v in lat_ab.element_vertices(i))
        mapping[i] = lat_ba.element_index(image)
    if len(set(mapping.values())) != len(lat_ba):
        return False
    from .algebras import sigma0

    sig = sigma0(algebra)
    dual_covers = {(j, i, sig[c]) for i, j, c in lat_ba.covers}
    image_covers = {(mapping[i], mapping[j], c) for i, j, c in lat_ab.covers}
    return image_covers == dual_covers


def run_verify(bound: tuple[int, int] = (3, 3)) -> dict:
    return Verifier(bound).run_all()


def structure_report(poset) -> dict:
    """Single structure-condition check used by `verify --structure`."""
    start = time.perf_counter()
    lat = order_ideals(poset)
    matrix = infer_structure_matrix(lat)
    millis = int((time.perf_counter() - start) * 1000)
    if matrix is None:
        return {"checks": [{
            "name": "structure_condition",
            "params": "no matrix M satisfies the structure condition",
            "status": "FAIL",
            "millis": millis,
        }]}
    return {"checks": [{
        "name": "structure_condition",
        "params": f"unique matrix rows {matrix[0]} / {matrix[1]}",
        "status": "PASS",
        "millis": millis,
    }]}


def bijection_report(bound: tuple[int, int] = (3, 3)) -> dict:
    v = Verifier(bound)
    v.run_check("tableau_suite", f"simple algebras, a<={bound[0]}, b<={bound[1]}",
                v.check_tableaux)
    return {"checks": v.checks}
