"""One-shot computation of every geometric quantity of a manifold, plus rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .curvature import (
    ConnectionCoefficients,
    DegeneratePlaneError,
    IrrationalRootError,
    IsotropicDirectionError,
    apply_J,
    classify_plane,
    covariant_derivative_R,
    curvature,
    curvature_double_bracket,
    holo_bisectional,
    levi_civita,
    ricci_and_scalar,
    sectional_curvature,
    w3_identity_defect,
    weyl,
)
from .lie import build_w3_killing, invariance_defect, jacobi_defect
from .polynomial import Polynomial
from .structure import (
    NordenManifold,
    F_tensor,
    check_norden,
    classify,
    isotropic_kahler_flag,
    lie_form,
    nijenhuis,
    norm_nabla_J,
    norm_nijenhuis,
    standard_J,
    standard_metric,
)
from .tensor import Tensor, basis_vector


def family_manifold(lams) -> NordenManifold:
    """The 4-parameter family with the diagonal (1, 1, -1, -1) metric and the standard J."""
    return NordenManifold(build_w3_killing(lams), standard_metric(), standard_J())


@dataclass
class Geometry:
    """Lazily computed invariants of a manifold; each attribute is computed once."""

    M: NordenManifold

    @cached_property
    def norden(self):
        return check_norden(self.M)

    @cached_property
    def jacobi(self) -> Tensor:
        return jacobi_defect(self.M.L)

    @cached_property
    def invariance(self) -> Tensor:
        return invariance_defect(self.M.L, self.M.g)

    @cached_property
    def conn(self) -> ConnectionCoefficients:
        return levi_civita(self.M.L, self.M.g)

    @cached_property
    def F(self) -> Tensor:
        return F_tensor(self.M, self.conn)

    @cached_property
    def theta(self) -> Tensor:
        return lie_form(self.F, self.M.g.g_inv)

    @cached_property
    def classes(self):
        return classify(self.M, self.F, self.theta)

    @cached_property
    def N(self) -> Tensor:
        return nijenhuis(self.M)

    @cached_property
    def norm_N(self) -> Polynomial:
        return norm_nijenhuis(self.M, self.N)

    @cached_property
    def norm_nabla_J(self) -> tuple[Polynomial, Polynomial]:
        return norm_nabla_J(self.M, self.conn, self.F)

    @cached_property
    def R(self) -> Tensor:
        return curvature(self.conn, self.M.L, self.M.g)

    @cached_property
    def R_shortcut(self) -> Tensor:
        return curvature_double_bracket(self.M.L, self.M.g)

    @cached_property
    def ricci(self) -> tuple[Tensor, Polynomial]:
        return ricci_and_scalar(self.R, self.M.g.g_inv)

    @property
    def rho(self) -> Tensor:
        return self.ricci[0]

    @property
    def tau(self) -> Polynomial:
        return self.ricci[1]

    @cached_property
    def W(self) -> Tensor:
        return weyl(self.R, self.rho, self.tau, self.M.g)

    @cached_property
    def nabla_R(self) -> Tensor:
        return covariant_derivative_R(self.R, self.conn)

    @cached_property
    def w3_identity(self) -> Tensor:
        return w3_identity_defect(self.R, self.conn, self.M.J, self.M.g)

    def basis(self, i: int):
        return basis_vector(i, self.M.dim)

    def sectional(self, i: int, j: int):
        return sectional_curvature(self.R, self.M.g, (self.basis(i), self.basis(j)))

    def plane_type(self, i: int, j: int) -> str:
        return classify_plane((self.basis(i), self.basis(j)), self.M.J, self.M.g)

    def bisectional(self, i: int, j: int) -> Polynomial:
        return holo_bisectional(self.R, self.M.g, self.M.J, self.basis(i), self.basis(j))


def _components(t: Tensor) -> list[dict]:
    return [{"index": list(idx), "value": str(p)} for idx, p in t.nonzero()]


def _quotient(num: Polynomial, den: Polynomial) -> str:
    if den.is_constant():
        return str(num / den.constant_value())
    return f"({num}) / ({den})"


def _holomorphic_pair(geo: Geometry):
    """First pair of basis vectors (x, y) with y not in span{x, Jx}."""
    n = geo.M.dim
    J = geo.M.J
    for i in range(1, n + 1):
        jx = apply_J(J, geo.basis(i))
        for j in range(i + 1, n + 1):
            if not jx[j - 1]:
                return i, j
    return None


def analyze(M: NordenManifold) -> dict:
    """Every reported quantity of ``M`` as a JSON-ready dictionary."""
    geo = Geometry(M)
    n = M.dim
    out: dict = {"schema": 1, "dim": n}
    norden_ok = geo.norden.ok
    out["norden"] = {
        "ok": norden_ok,
        "violations": [
            {"condition": kind, "index": [i, j], "value": str(v)}
            for kind, i, j, v in geo.norden.violations
        ],
    }
    out["jacobi_holds"] = geo.jacobi.is_zero()
    out["metric_invariant"] = geo.invariance.is_zero()
    out["F"] = _components(geo.F)
    out["theta"] = _components(geo.theta)
    out["nijenhuis"] = _components(geo.N)
    direct, via_F = geo.norm_nabla_J
    out["norm_nabla_J"] = str(direct)
    out["norm_nabla_J_via_F"] = str(via_F)
    out["norm_N"] = str(geo.norm_N)
    if norden_ok:
        flags = geo.classes
        out["classification"] = {
            "class": flags.label(),
            "w0": flags.w0,
            "w1": flags.w1,
            "w2": flags.w2,
            "w3": flags.w3,
            "theta_zero": flags.theta_zero,
        }
        iso = isotropic_kahler_flag(direct)
        out["isotropic_kahler"] = iso if isinstance(iso, bool) else f"{iso} = 0"
    out["R"] = _components(geo.R)
    out["rho"] = _components(geo.rho)
    out["tau"] = str(geo.tau)
    if n >= 4 and n % 2 == 0:
        out["weyl_zero"] = geo.W.is_zero()
        out["W"] = _components(geo.W)
    out["nabla_R_zero"] = geo.nabla_R.is_zero()
    out["curvature_zero"] = geo.R.is_zero()
    planes = []
    for i, j in combinations(range(1, n + 1), 2):
        entry: dict = {"plane": [i, j]}
        try:
            num, den = geo.sectional(i, j)
            entry["k"] = _quotient(num, den)
        except DegeneratePlaneError:
            entry["k"] = None
            entry["degenerate"] = True
        if norden_ok and not entry.get("degenerate"):
            entry["type"] = geo.plane_type(i, j)
        planes.append(entry)
    out["sectional"] = planes
    if norden_ok:
        pair = _holomorphic_pair(geo)
        if pair is not None:
            try:
                out["bisectional"] = {"pair": list(pair), "h": str(geo.bisectional(*pair))}
            except (IsotropicDirectionError, IrrationalRootError) as exc:
                out["bisectional"] = {"pair": list(pair), "h": None, "reason": str(exc)}
    return out


def render_analysis(result: dict, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    lines = []
    if not result["norden"]["ok"]:
        lines.append("warning: not a Norden structure; class-dependent output skipped")
        for v in result["norden"]["violations"]:
            lines.append(f"  {v['condition']} fails at {tuple(v['index'])}: defect {v['value']}")
    if not result["jacobi_holds"]:
        lines.append("warning: structure constants violate the Jacobi identity")
    if "classification" in result:
        c = result["classification"]
        lines.append(f"class: {c['class']}")
        lines.append(
            "flags: " + ", ".join(f"{k}={c[k]}" for k in ("w0", "w1", "w2", "w3", "theta_zero"))
        )
    lines.append(f"metric invariant: {result['metric_invariant']}")
    if result["curvature_zero"]:
        lines.append("all curvature quantities zero")

    def block(title, comps, prefix):
        if comps:
            lines.append(f"{title}:")
            for c in comps:
                lines.append(f"  {prefix}{''.join(str(i) for i in c['index'])} = {c['value']}")

    block("F (nonzero)", result["F"], "F")
    block("theta (nonzero)", result["theta"], "theta")
    block("Nijenhuis N^k_ij (nonzero, index ijk)", result["nijenhuis"], "N")
    lines.append(f"||nabla J|| = {result['norm_nabla_J']}")
    lines.append(f"||N|| = {result['norm_N']}")
    if "isotropic_kahler" in result:
        iso = result["isotropic_kahler"]
        lines.append(f"isotropic Kahler: {str(iso).lower() if isinstance(iso, bool) else 'iff ' + iso}")
    block("R (nonzero)", result["R"], "R")
    block("rho (nonzero)", result["rho"], "rho")
    lines.append(f"tau = {result['tau']}")
    if "weyl_zero" in result:
        lines.append(f"Weyl tensor zero: {result['weyl_zero']}")
        block("W (nonzero)", result["W"], "W")
    lines.append(f"nabla R = 0: {result['nabla_R_zero']}")
    lines.append("sectional curvatures of basis planes:")
    for p in result["sectional"]:
        i, j = p["plane"]
        label = f"alpha{i}{j}"
        if p.get("degenerate"):
            lines.append(f"  {label}: degenerate")
        else:
            kind = f" [{p['type']}]" if "type" in p else ""
            lines.append(f"  k({label}) = {p['k']}{kind}")
    if "bisectional" in result:
        b = result["bisectional"]
        i, j = b["pair"]
        if b["h"] is None:
            lines.append(f"h(X{i}, X{j}) undefined: {b['reason']}")
        else:
            lines.append(f"h(X{i}, X{j}) = {b['h']}")
    return "\n".join(lines) + "\n"
