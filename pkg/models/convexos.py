# Conjuntos convexos semilineares de Q²: poliedros com desigualdades estritas, fecho,
# segmentos, retas, subespaços afins, projeções, limitação, fecho convexo e pontos extremos.
import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from core.excecoes import GeometryError, InputFormatError
from models.incidencia import (AffineLine, AffinePoint, between, collinear, intersect, line_through,
                               parallel_through)
from models.intervalos import as_rational, betweenness_axioms, fmt

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, Fraction]


def _dot(n: Vector, p: Vector) -> Fraction:
    return n[0] * p[0] + n[1] * p[1]


def _cross(u: Vector, v: Vector) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _vec(P: AffinePoint) -> Vector:
    return (P.x, P.y)


@dataclass(frozen=True)
class Constraint:
    """a·x + b·y ≤ c (ou < c quando strict)."""
    a: Fraction
    b: Fraction
    c: Fraction
    strict: bool = False

    @property
    def normal(self) -> Vector:
        return (self.a, self.b)

    def value(self, p: Vector) -> Fraction:
        return self.a * p[0] + self.b * p[1] - self.c

    def holds(self, p: Vector) -> bool:
        v = self.value(p)
        return v < 0 if self.strict else v <= 0

    def relaxed(self) -> "Constraint":
        return Constraint(self.a, self.b, self.c, False)

    def __str__(self) -> str:
        return f"{fmt(self.a)}*x + {fmt(self.b)}*y {'<' if self.strict else '<='} {fmt(self.c)}"


@dataclass(frozen=True)
class Support:
    """sup de n·p sobre o conjunto: valor (None = +∞) e se é atingido."""
    value: Optional[Fraction]
    attained: bool


@dataclass(frozen=True)
class ConvexPolyhedron:
    constraints: Tuple[Constraint, ...] = ()
    _cache: Dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    # -- construção ---------------------------------------------------------

    @classmethod
    def of(cls, constraints: Iterable[Constraint]) -> "ConvexPolyhedron":
        kept = []
        for con in constraints:
            if con.a == 0 and con.b == 0:
                # 0 ≤ c ou 0 < c: trivial ou vazio
                if (con.c > 0) or (con.c == 0 and not con.strict):
                    continue
                return cls.empty()
            kept.append(con)
        return cls(tuple(dict.fromkeys(kept)))

    @classmethod
    def empty(cls) -> "ConvexPolyhedron":
        return cls((Constraint(Fraction(0), Fraction(0), Fraction(-1)),))

    @classmethod
    def plane(cls) -> "ConvexPolyhedron":
        return cls(())

    @classmethod
    def parse(cls, text: str) -> "ConvexPolyhedron":
        """Lê "a*x + b*y (<|<=|=|>=|>) c" separados por ';' ou 'and'."""
        parts = [p for p in re.split(r";|\band\b|∧", text) if p.strip()]
        constraints: List[Constraint] = []
        for part in parts:
            constraints.extend(_parse_constraint(part))
        return cls.of(constraints)

    @classmethod
    def from_line(cls, line: AffineLine) -> "ConvexPolyhedron":
        return cls.of(_equality(line.a, line.b, line.c))

    @classmethod
    def from_point(cls, P: AffinePoint) -> "ConvexPolyhedron":
        return cls.of(_equality(1, 0, P.x) + _equality(0, 1, P.y))

    def to_text(self) -> str:
        if not self.constraints:
            return "true"
        return "; ".join(str(c) for c in self.constraints)

    def __str__(self) -> str:
        return self.to_text()

    # -- geometria do fecho -------------------------------------------------

    def _generators(self) -> Optional[Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]]:
        """Fecho P̄ = conv(pontos) + cone(direções), ou None se P̄ é vazio."""
        if "gen" in self._cache:
            return self._cache["gen"]
        closed = [c.relaxed() for c in self.constraints]
        normals = [c.normal for c in closed]

        candidates = []
        for c1, c2 in itertools.combinations(closed, 2):
            det = _cross(c1.normal, c2.normal)
            if det != 0:
                candidates.append(((c1.c * c2.b - c2.c * c1.b) / det, (c1.a * c2.c - c2.a * c1.c) / det))
        points = [p for p in dict.fromkeys(candidates) if all(c.holds(p) for c in closed)]

        direction_candidates = [(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)),
                                (Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))]
        for n in normals:
            direction_candidates += [(-n[1], n[0]), (n[1], -n[0]), (-n[0], -n[1])]
        rays = [d for d in dict.fromkeys(direction_candidates) if all(_dot(n, d) <= 0 for n in normals)]

        if not points:
            # Sem vértices: P̄ contém uma reta (ou é vazio); os pés das retas de fronteira
            # mais a origem, quando viáveis, geram P̄ junto com as direções
            feet = [(Fraction(0), Fraction(0))]
            for c in closed:
                norm = _dot(c.normal, c.normal)
                if norm:
                    feet.append((c.a * c.c / norm, c.b * c.c / norm))
            points = [p for p in dict.fromkeys(feet) if all(c.holds(p) for c in closed)]
        result = (tuple(points), _canonical_rays(rays)) if points else None
        self._cache["gen"] = result
        return result

    def _tight_everywhere(self, con: Constraint) -> bool:
        gen = self._generators()
        if gen is None:
            return True
        points, rays = gen
        return all(con.value(p) == 0 for p in points) and all(_dot(con.normal, r) == 0 for r in rays)

    @property
    def is_empty(self) -> bool:
        if "empty" not in self._cache:
            self._cache["empty"] = self._generators() is None or any(
                c.strict and self._tight_everywhere(c) for c in self.constraints
            )
        return self._cache["empty"]

    def contains(self, P) -> bool:
        p = _vec(P) if isinstance(P, AffinePoint) else P
        return all(c.holds(p) for c in self.constraints)

    @property
    def dimension(self) -> int:
        """Dimensão do fecho afim (−1 para o vazio)."""
        if self.is_empty:
            return -1
        points, rays = self._generators()
        vectors = [(p[0] - points[0][0], p[1] - points[0][1]) for p in points[1:]] + list(rays)
        vectors = [v for v in vectors if v != (0, 0)]
        if not vectors:
            return 0
        if any(_cross(vectors[0], v) != 0 for v in vectors[1:]):
            return 2
        return 1

    def support(self, n: Vector) -> Support:
        """sup de n·p sobre o conjunto, com atingimento exato."""
        if self.is_empty:
            return Support(None, False)
        points, rays = self._generators()
        if any(_dot(n, r) > 0 for r in rays):
            return Support(None, False)
        best = max(_dot(n, p) for p in points)
        face_points = [p for p in points if _dot(n, p) == best]
        face_rays = [r for r in rays if _dot(n, r) == 0]
        # A face é vazia no conjunto sse alguma restrição estrita é justa nela toda
        for con in self.constraints:
            if con.strict and all(con.value(p) == 0 for p in face_points) and \
                    all(_dot(con.normal, r) == 0 for r in face_rays):
                return Support(best, False)
        return Support(best, True)

    # -- reticulado ---------------------------------------------------------

    def leq(self, other: "ConvexPolyhedron") -> bool:
        if self.is_empty:
            return True
        for con in other.constraints:
            sup = self.support(con.normal)
            if sup.value is None or sup.value > con.c:
                return False
            if con.strict and sup.value == con.c and sup.attained:
                return False
        return True

    def same_set(self, other: "ConvexPolyhedron") -> bool:
        return self.leq(other) and other.leq(self)

    def meet(self, other: "ConvexPolyhedron") -> "ConvexPolyhedron":
        return ConvexPolyhedron.of(self.constraints + other.constraints)

    def canonical(self) -> "ConvexPolyhedron":
        """Forma irredundante: tira restrições enquanto o conjunto não muda."""
        if self.is_empty:
            return ConvexPolyhedron.empty()
        current = list(self.constraints)
        i = 0
        while i < len(current):
            trial = ConvexPolyhedron.of(current[:i] + current[i + 1:])
            if trial.same_set(self):
                current = current[:i] + current[i + 1:]
            else:
                i += 1
        return ConvexPolyhedron.of(current)

    # -- consultas ----------------------------------------------------------

    def recession_rays(self) -> Tuple[Vector, ...]:
        gen = self._generators()
        return () if gen is None or self.is_empty else gen[1]

    def relative_interior_point(self) -> Optional[Vector]:
        """Média dos pontos geradores mais a soma das direções: cai no interior relativo."""
        if self.is_empty:
            return None
        points, rays = self._generators()
        k = len(points)
        return (sum(p[0] for p in points) / k + sum(r[0] for r in rays),
                sum(p[1] for p in points) / k + sum(r[1] for r in rays))

    def vertices(self) -> Tuple[Vector, ...]:
        """Pontos extremos do fecho quando ele é limitado."""
        gen = self._generators()
        if gen is None or self.is_empty or gen[1]:
            return ()
        return hull(AffinePoint(*p) for p in gen[0]).vertices


def _canonical_rays(rays: Sequence[Vector]) -> Tuple[Vector, ...]:
    # Direções normalizadas (maior coordenada absoluta = 1), sem repetição
    seen = {}
    for r in rays:
        scale = max(abs(r[0]), abs(r[1]))
        if scale == 0:
            continue
        seen[(r[0] / scale, r[1] / scale)] = None
    return tuple(sorted(seen))


def _equality(a, b, c) -> List[Constraint]:
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    return [Constraint(a, b, c), Constraint(-a, -b, -c)]


_TERM = re.compile(r"([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*\*?\s*([xy])?")


def _linear(text: str) -> Tuple[Fraction, Fraction, Fraction]:
    """Coeficientes (a, b, k) de a·x + b·y + k."""
    a = b = k = Fraction(0)
    text = text.replace(" ", "")
    if not text:
        raise InputFormatError("lado vazio numa restrição")
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos or not (match.group(2) or match.group(3)):
            raise InputFormatError(f"termo inválido em {text!r}")
        sign = -1 if match.group(1) == "-" else 1
        coef = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        if match.group(3) == "x":
            a += sign * coef
        elif match.group(3) == "y":
            b += sign * coef
        else:
            k += sign * coef
        pos = match.end()
    return a, b, k


def _parse_constraint(text: str) -> List[Constraint]:
    match = re.fullmatch(r"\s*(.+?)\s*(<=|>=|<|>|=)\s*(.+?)\s*", text)
    if not match:
        raise InputFormatError(f"restrição inválida: {text!r}")
    left, op, right = match.groups()
    la, lb, lk = _linear(left)
    ra, rb, rk = _linear(right)
    a, b, c = la - ra, lb - rb, rk - lk
    if op == "=":
        return _equality(a, b, c)
    if op in ("<", "<="):
        return [Constraint(a, b, c, op == "<")]
    return [Constraint(-a, -b, -c, op == ">")]


# ---------------------------------------------------------------------------
# Operações do reticulado de convexos
# ---------------------------------------------------------------------------

def closure(C: ConvexPolyhedron) -> ConvexPolyhedron:
    """Fecho topológico: sem as estritas (o vazio continua vazio)."""
    if C.is_empty:
        return ConvexPolyhedron.empty()
    return ConvexPolyhedron.of(c.relaxed() for c in C.canonical().constraints)


def is_closed(C: ConvexPolyhedron) -> bool:
    return C.same_set(closure(C))


def is_bounded_oracle(C: ConvexPolyhedron) -> bool:
    """Cone de recessão trivial."""
    return not C.recession_rays()


def is_segment(C: ConvexPolyhedron) -> bool:
    """Fecho convexo de dois pontos distintos."""
    return not C.is_empty and C.dimension == 1 and is_bounded_oracle(C) and is_closed(C)


def is_line(C: ConvexPolyhedron) -> bool:
    if C.is_empty or C.dimension != 1 or not is_closed(C):
        return False
    rays = C.recession_rays()
    return any((-r[0], -r[1]) in rays for r in rays)


def is_affine_subspace(C: ConvexPolyhedron) -> bool:
    """Ponto, reta ou o plano todo."""
    if C.is_empty:
        return False
    if C.dimension == 0:
        return True
    if C.dimension == 1:
        return is_line(C)
    return C.same_set(ConvexPolyhedron.plane())


# ---------------------------------------------------------------------------
# Projeções
# ---------------------------------------------------------------------------

def _direction(line: AffineLine) -> Vector:
    return (-line.b, line.a)


def project_point(A: AffineLine, ell: AffineLine, P: AffinePoint) -> AffinePoint:
    """Reta paralela a A por P cortando ℓ."""
    _check_projection(A, ell)
    return intersect(parallel_through(A, P), ell)


def _check_projection(A: AffineLine, ell: AffineLine) -> None:
    if A.is_parallel(ell):
        raise GeometryError("ℓ é paralela a A (ou contida nela): projeção indefinida")


def project(A: AffineLine, ell: AffineLine, C: ConvexPolyhedron) -> ConvexPolyhedron:
    """
        Imagem exata de C pela projeção paralela a A sobre ℓ.

        Em ℓ a forma n_A·p é monótona, então a imagem é ℓ ∩ {inf ⊲ n_A·p ⊲ sup}, com as
        desigualdades estritas onde o extremo não é atingido em C.

        Raises:
            GeometryError: ℓ paralela a A ou contida nela.
    """
    _check_projection(A, ell)
    if C.is_empty:
        return ConvexPolyhedron.empty()
    n = (A.a, A.b)
    upper = C.support(n)
    lower = C.support((-n[0], -n[1]))
    constraints = _equality(ell.a, ell.b, ell.c)
    if upper.value is not None:
        constraints.append(Constraint(n[0], n[1], upper.value, not upper.attained))
    if lower.value is not None:
        constraints.append(Constraint(-n[0], -n[1], lower.value, not lower.attained))
    return ConvexPolyhedron.of(constraints)


X_AXIS = AffineLine.of(0, 1, 0)
Y_AXIS = AffineLine.of(1, 0, 0)


def is_bounded(C: ConvexPolyhedron) -> bool:
    """Teste pelos eixos: as sombras nos dois eixos coordenados são limitadas."""
    if C.is_empty:
        return True
    return all(is_bounded_oracle(project(A, ell, C)) for A, ell in ((Y_AXIS, X_AXIS), (X_AXIS, Y_AXIS)))


# ---------------------------------------------------------------------------
# Politopos
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polytope:
    """Representação por vértices em posição convexa, sentido anti-horário."""
    vertices: Tuple[Vector, ...]

    def points(self) -> Tuple[AffinePoint, ...]:
        return tuple(AffinePoint(*v) for v in self.vertices)

    def to_polyhedron(self) -> ConvexPolyhedron:
        vs = self.vertices
        if len(vs) == 1:
            return ConvexPolyhedron.from_point(AffinePoint(*vs[0]))
        if len(vs) == 2:
            p, q = (AffinePoint(*v) for v in vs)
            line = line_through(p, q)
            d = (q.x - p.x, q.y - p.y)
            return ConvexPolyhedron.of(_equality(line.a, line.b, line.c) + [
                Constraint(d[0], d[1], _dot(d, vs[1])),
                Constraint(-d[0], -d[1], -_dot(d, vs[0])),
            ])
        constraints = []
        for p, q in zip(vs, vs[1:] + vs[:1]):
            # lado esquerdo da aresta p -> q é o interior
            a, b = q[1] - p[1], p[0] - q[0]
            constraints.append(Constraint(a, b, a * p[0] + b * p[1]))
        return ConvexPolyhedron.of(constraints)

    def __str__(self) -> str:
        return " ".join(str(AffinePoint(*v)) for v in self.vertices)


def hull(points: Iterable[AffinePoint]) -> Polytope:
    """Fecho convexo exato (cadeia monótona, sem pontos colineares nas arestas)."""
    pts = sorted({_vec(P) for P in points})
    if not pts:
        raise GeometryError("fecho convexo de um conjunto vazio")
    if len(pts) <= 2:
        return Polytope(tuple(pts))

    def half(seq):
        chain: List[Vector] = []
        for p in seq:
            while len(chain) >= 2 and _cross((chain[-1][0] - chain[-2][0], chain[-1][1] - chain[-2][1]),
                                             (p[0] - chain[-2][0], p[1] - chain[-2][1])) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    vertices = tuple(lower[:-1] + upper[:-1])
    if len(vertices) < 2:
        # todos colineares: só os dois extremos
        vertices = (pts[0], pts[-1])
    return Polytope(vertices)


def extremal_points(C: Polytope) -> FrozenSet[AffinePoint]:
    return frozenset(C.points())


def finite_subset_family(ell: AffineLine, A: AffineLine, C: Polytope) -> FrozenSet[AffinePoint]:
    """{π_{A,ℓ}(e) : e extremo de C}."""
    return frozenset(project_point(A, ell, e) for e in extremal_points(C))


def witness_for_subset(ell: AffineLine, A: AffineLine, target: Iterable[AffinePoint]) -> Polytope:
    """Politopo cujos extremos projetam exatamente sobre `target` ⊆ ℓ: cada ponto sobe ao
    longo de A até uma parábola, o que deixa todos em posição convexa."""
    _check_projection(A, ell)
    target = list(dict.fromkeys(target))
    if not target:
        raise GeometryError("conjunto alvo vazio")
    d = _direction(ell)
    dA = _direction(A)
    lifted = []
    for P in target:
        if not ell.contains(P):
            raise GeometryError(f"{P} não está em ℓ")
        t = _dot(d, _vec(P))
        h = 1 + t * t
        lifted.append(AffinePoint(P.x + h * dA[0], P.y + h * dA[1]))
    return hull(lifted)


# ---------------------------------------------------------------------------
# Caracterizações definíveis, checadas numa amostra finita
# ---------------------------------------------------------------------------

def sample_grid(low: int = -1, high: int = 3, step: Fraction = Fraction(1, 2)) -> Tuple[Vector, ...]:
    count = int((high - low) / step)
    coords = [low + i * step for i in range(count + 1)]
    return tuple((Fraction(x), Fraction(y)) for x in coords for y in coords)


def candidate_points(C: ConvexPolyhedron, grid: Sequence[Vector]) -> List[Vector]:
    """Grade, pontos geradores do fecho, um ponto r do interior relativo e os pontos médios
    entre r e cada gerador (r + direção, para as direções)."""
    found = list(grid)
    gen = C._generators()
    if gen is not None:
        found += list(gen[0])
    inner = C.relative_interior_point()
    if inner is not None:
        points, rays = gen
        found.append(inner)
        found += [((inner[0] + p[0]) / 2, (inner[1] + p[1]) / 2) for p in points]
        found += [(inner[0] + r[0], inner[1] + r[1]) for r in rays]
    return list(dict.fromkeys(found))


def atoms_of(C: ConvexPolyhedron, grid: Sequence[Vector]) -> List[Vector]:
    """Átomos amostrados de C: os candidatos que estão em C."""
    return [p for p in candidate_points(C, grid) if C.contains(p)]


def half_open_inside(C: ConvexPolyhedron, a: Vector, b: Vector) -> bool:
    """[a, b) ⊆ C, exato: cada restrição é afim ao longo do segmento."""
    for con in C.constraints:
        va, vb = con.value(a), con.value(b)
        if con.strict:
            if not (va < 0 and vb <= 0):
                return False
        elif not (va <= 0 and vb <= 0):
            return False
    return True


def closure_by_limits(C: ConvexPolyhedron, grid: Sequence[Vector]) -> FrozenSet[Vector]:
    """Candidatos absorvidos pelo fecho definível: os átomos de C e os limites b de algum
    segmento [a, b) ⊆ C com a átomo amostrado."""
    inside = atoms_of(C, grid)
    result = set(inside)
    for b in candidate_points(C, grid):
        if b in result:
            continue
        if any(a != b and half_open_inside(C, a, b) for a in inside):
            result.add(b)
    return frozenset(result)


def segment_by_betweenness(C: ConvexPolyhedron, grid: Sequence[Vector]) -> bool:
    """
        Cláusulas de I*: C não é átomo e o entremeio dos átomos amostrados é limitado,
        com extremos em C que cercam C.
    """
    atoms = atoms_of(C, grid)
    if len(atoms) < 2:
        return False
    points = {p: AffinePoint(*p) for p in atoms}
    # Testemunha barata: três átomos sem nenhum entre os outros dois já derrubam (a)
    first, second = points[atoms[0]], points[atoms[1]]
    for p in atoms[2:]:
        third = points[p]
        if not (between(first, second, third) or between(second, first, third)
                or between(first, third, second)):
            return False
    B = {(x, y, z) for x in atoms for y in atoms for z in atoms
         if between(points[x], points[y], points[z])}
    report = betweenness_axioms(B, atoms)
    if not report.bounded:
        return False
    a, b = report.endpoints
    return C.leq(hull([points[a], points[b]]).to_polyhedron())


def line_by_segments(C: ConvexPolyhedron, grid: Sequence[Vector], depth: int = 6) -> bool:
    """União de segmentos colineares em que todo átomo amostrado é interior a um segmento
    [b, c] ⊆ C, procurado em escalas 1/2^k. Só elementos fechados (pelo fecho definível) contam."""
    atoms = atoms_of(C, grid)
    if len(atoms) < 2:
        return False
    if closure_by_limits(C, grid) != frozenset(atoms):
        return False
    points = [AffinePoint(*p) for p in atoms]
    if not all(collinear(points[0], points[1], R) for R in points[2:]):
        return False
    line = ConvexPolyhedron.from_line(line_through(points[0], points[1]))
    if not C.leq(line):
        return False
    d = (points[1].x - points[0].x, points[1].y - points[0].y)
    for a in atoms:
        found = False
        for k in range(depth + 1):
            s = Fraction(1, 2 ** k)
            b = AffinePoint(a[0] - s * d[0], a[1] - s * d[1])
            c = AffinePoint(a[0] + s * d[0], a[1] + s * d[1])
            if hull([b, c]).to_polyhedron().leq(C):
                found = True
                break
        if not found:
            return False
    return True


def affine_by_segment_lines(C: ConvexPolyhedron, grid: Sequence[Vector]) -> bool:
    """Não vazio e, para todo segmento amostrado S ⊆ C, a reta de S está em C."""
    if C.is_empty:
        return False
    atoms = atoms_of(C, grid)
    for a, b in itertools.combinations(atoms, 2):
        line = ConvexPolyhedron.from_line(line_through(AffinePoint(*a), AffinePoint(*b)))
        if not line.leq(C):
            return False
    return True


def extremal_by_segments(P: Polytope, sample: Sequence[Vector]) -> FrozenSet[Vector]:
    """Pontos amostrados de P que não são interiores a nenhum segmento [v, c] ⊆ P, com v
    vértice e c a saída exata do raio que sai de v e passa por a."""
    region = P.to_polyhedron()
    candidates = [p for p in list(sample) + list(P.vertices) if region.contains(p)]
    result = set()
    for a in dict.fromkeys(candidates):
        interior = False
        for v in P.vertices:
            if v == a:
                continue
            d = (a[0] - v[0], a[1] - v[1])
            # maior t com v + t·d ainda em P
            limits = [-con.value(v) / _dot(con.normal, d) for con in region.constraints
                      if _dot(con.normal, d) > 0]
            if not limits or min(limits) > 1:
                interior = True
                break
        if not interior:
            result.add(a)
    return frozenset(result)


def universe_of_polyhedra() -> List[ConvexPolyhedron]:
    """Cerca de 50 poliedros: formas básicas e os encontros dois a dois entre elas,
    sem repetir conjuntos."""
    base = [ConvexPolyhedron.parse(t) for t in (
        "x >= 0; y >= 0; x + y <= 2",
        "x > 0; y > 0; x + y < 2",
        "x >= 0; x <= 1; y >= 0; y <= 1",
        "x >= 0; x <= 2; y = 0",
        "x > 0; x < 2; y = 0",
        "x >= 0; x < 2; y = x",
        "x = 1; y = 1",
        "y = 0",
        "x - y = 1",
        "y >= 0",
        "y > 0",
        "x >= 0; y >= 0",
        "x >= 0; y = 0",
        "y >= 0; y <= 1",
        "x >= 0; x <= 2; y >= 0; y <= 2",
        "x + y >= 1; x <= 2; y <= 2",
    )] + [ConvexPolyhedron.plane(), ConvexPolyhedron.empty()]
    universe: List[ConvexPolyhedron] = []

    def add(C: ConvexPolyhedron) -> None:
        if not any(C.same_set(D) for D in universe):
            universe.append(C)

    for C in base:
        add(C)
    for C, D in itertools.combinations(base[:10], 2):
        add(C.meet(D))
        if len(universe) >= 50:
            break
    for C in list(universe):
        if not C.is_empty:
            add(closure(C))
    return universe
