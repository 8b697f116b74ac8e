# Sintaxe abstrata das fórmulas de primeira ordem (uma só sorte, relações nomeadas),
# parser do formato S-expression e impressão de volta para texto.
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from core.excecoes import ArityError, FormulaSyntaxError

# Palavras reservadas da gramática, não podem ser nome de relação nem de variável
KEYWORDS = {"and", "or", "not", "implies", "exists", "forall"}

_TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|(=)|([A-Za-z0-9_]+))")


@dataclass(frozen=True)
class Atom:
    rel: str
    args: Tuple[str, ...]


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    sub: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Atom, Eq, Not, And, Or, Implies, Exists, Forall]

BINARY = {"and": And, "or": Or, "implies": Implies}
QUANTIFIERS = {"exists": Exists, "forall": Forall}


# ---------------------------------------------------------------------------
# Construtores auxiliares, usados pelos módulos que montam fórmulas em código
# ---------------------------------------------------------------------------

def atom(rel: str, *args: str) -> Atom:
    return Atom(rel, tuple(args))


def conj(*formulas: Formula) -> Formula:
    """Conjunção associada à direita."""
    if not formulas:
        raise ValueError("conj precisa de ao menos uma fórmula")
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = And(f, result)
    return result


def disj(*formulas: Formula) -> Formula:
    if not formulas:
        raise ValueError("disj precisa de ao menos uma fórmula")
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = Or(f, result)
    return result


def iff(left: Formula, right: Formula) -> Formula:
    return And(Implies(left, right), Implies(right, left))


def exists_many(variables: Sequence[str], body: Formula) -> Formula:
    for v in reversed(list(variables)):
        body = Exists(v, body)
    return body


def forall_many(variables: Sequence[str], body: Formula) -> Formula:
    for v in reversed(list(variables)):
        body = Forall(v, body)
    return body


def verum(var: str) -> Formula:
    # Não existe constante "true" na gramática; x = x faz esse papel
    return Eq(var, var)


# ---------------------------------------------------------------------------
# Consultas sintáticas
# ---------------------------------------------------------------------------

def children(phi: Formula) -> Tuple[Formula, ...]:
    if isinstance(phi, Not):
        return (phi.sub,)
    if isinstance(phi, (And, Or, Implies)):
        return (phi.left, phi.right)
    if isinstance(phi, (Exists, Forall)):
        return (phi.body,)
    return ()


def free_vars(phi: Formula) -> frozenset:
    if isinstance(phi, Atom):
        return frozenset(phi.args)
    if isinstance(phi, Eq):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, (Exists, Forall)):
        return free_vars(phi.body) - {phi.var}
    result = frozenset()
    for child in children(phi):
        result |= free_vars(child)
    return result


def all_vars(phi: Formula) -> frozenset:
    """Todas as variáveis que aparecem (livres, ligadas ou só quantificadas)."""
    if isinstance(phi, Atom):
        return frozenset(phi.args)
    if isinstance(phi, Eq):
        return frozenset((phi.left, phi.right))
    result = frozenset((phi.var,)) if isinstance(phi, (Exists, Forall)) else frozenset()
    for child in children(phi):
        result |= all_vars(child)
    return result


def walk(phi: Formula) -> Iterator[Formula]:
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def relation_arities(phi: Formula) -> Dict[str, int]:
    """Mapa relação -> aridade. Levanta ArityError se a mesma relação aparece com aridades diferentes."""
    arities: Dict[str, int] = {}
    for node in walk(phi):
        if isinstance(node, Atom):
            known = arities.setdefault(node.rel, len(node.args))
            if known != len(node.args):
                raise ArityError(
                    f"relação '{node.rel}' usada com aridade {known} e {len(node.args)}"
                )
    return arities


def is_existential(phi: Formula) -> bool:
    """Sentença puramente existencial: quantificadores ∃ só em posição positiva."""
    return _polarity_ok(phi, True, Exists)


def is_universal(phi: Formula) -> bool:
    return _polarity_ok(phi, True, Forall)


def _polarity_ok(phi: Formula, positive: bool, allowed) -> bool:
    if isinstance(phi, (Atom, Eq)):
        return True
    if isinstance(phi, Not):
        return _polarity_ok(phi.sub, not positive, allowed)
    if isinstance(phi, Implies):
        return _polarity_ok(phi.left, not positive, allowed) and _polarity_ok(phi.right, positive, allowed)
    if isinstance(phi, (And, Or)):
        return _polarity_ok(phi.left, positive, allowed) and _polarity_ok(phi.right, positive, allowed)
    # Debaixo de uma negação ∃ vira ∀ e vice-versa
    effective = type(phi)
    if not positive:
        effective = Forall if effective is Exists else Exists
    if effective is not allowed:
        return False
    return _polarity_ok(phi.body, positive, allowed)


# ---------------------------------------------------------------------------
# Substituição sem captura
# ---------------------------------------------------------------------------

class FreshNames:
    """Gerador determinístico de nomes novos: v1, v2, ... pulando os já usados."""

    def __init__(self, used: Iterable[str] = (), prefix: str = "v"):
        self.used = set(used)
        self.prefix = prefix
        self.counter = 0

    def __call__(self) -> str:
        while True:
            self.counter += 1
            name = f"{self.prefix}{self.counter}"
            if name not in self.used:
                self.used.add(name)
                return name


def substitute(phi: Formula, mapping: Dict[str, str], fresh: FreshNames) -> Formula:
    """Troca variáveis livres segundo `mapping`. Toda variável ligada é renomeada
    para um nome novo, então nenhuma substituição pode ser capturada."""
    if isinstance(phi, Atom):
        return Atom(phi.rel, tuple(mapping.get(a, a) for a in phi.args))
    if isinstance(phi, Eq):
        return Eq(mapping.get(phi.left, phi.left), mapping.get(phi.right, phi.right))
    if isinstance(phi, Not):
        return Not(substitute(phi.sub, mapping, fresh))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(substitute(phi.left, mapping, fresh), substitute(phi.right, mapping, fresh))
    new_var = fresh()
    inner = dict(mapping)
    inner[phi.var] = new_var
    return type(phi)(new_var, substitute(phi.body, inner, fresh))


# ---------------------------------------------------------------------------
# Impressão e parser
# ---------------------------------------------------------------------------

def to_text(phi: Formula) -> str:
    if isinstance(phi, Atom):
        return "(" + " ".join((phi.rel,) + phi.args) + ")"
    if isinstance(phi, Eq):
        return f"(= {phi.left} {phi.right})"
    if isinstance(phi, Not):
        return f"(not {to_text(phi.sub)})"
    if isinstance(phi, And):
        return f"(and {to_text(phi.left)} {to_text(phi.right)})"
    if isinstance(phi, Or):
        return f"(or {to_text(phi.left)} {to_text(phi.right)})"
    if isinstance(phi, Implies):
        return f"(implies {to_text(phi.left)} {to_text(phi.right)})"
    keyword = "exists" if isinstance(phi, Exists) else "forall"
    return f"({keyword} {phi.var} {to_text(phi.body)})"


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise FormulaSyntaxError(f"caractere inesperado {text[pos]!r}", pos)
        start = match.start(match.lastindex)
        tokens.append((match.group(match.lastindex), start))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Tuple[str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> Tuple[str, int]:
        token = self.peek()
        if token is None:
            raise FormulaSyntaxError("fim inesperado da fórmula", len(self.text))
        if expected is not None and token[0] != expected:
            raise FormulaSyntaxError(f"esperava '{expected}', encontrei '{token[0]}'", token[1])
        self.index += 1
        return token

    def identifier(self) -> str:
        value, pos = self.take()
        if value in ("(", ")", "=") or value in KEYWORDS:
            raise FormulaSyntaxError(f"esperava um identificador, encontrei '{value}'", pos)
        return value

    def formula(self) -> Formula:
        self.take("(")
        head, pos = self.take()
        if head == "=":
            result: Formula = Eq(self.identifier(), self.identifier())
        elif head == "not":
            result = Not(self.formula())
        elif head in BINARY:
            result = BINARY[head](self.formula(), self.formula())
        elif head in QUANTIFIERS:
            var = self.identifier()
            result = QUANTIFIERS[head](var, self.formula())
        elif head in ("(", ")"):
            raise FormulaSyntaxError(f"esperava operador ou relação, encontrei '{head}'", pos)
        else:
            args = []
            while self.peek() is not None and self.peek()[0] != ")":
                args.append(self.identifier())
            if not args:
                raise FormulaSyntaxError(f"relação '{head}' sem argumentos", pos)
            result = Atom(head, tuple(args))
        self.take(")")
        return result


def parse_formula(text: str) -> Formula:
    """
        Lê uma fórmula no formato S-expression.

        Args:
            text (str): Texto da fórmula, ex. "(exists x (forall y (leq x y)))".

        Raises:
            FormulaSyntaxError: Texto fora da gramática, com a posição do erro.
            ArityError: A mesma relação usada com aridades diferentes.

        Returns:
            Formula: A árvore sintática.
    """
    parser = _Parser(text)
    result = parser.formula()
    leftover = parser.peek()
    if leftover is not None:
        raise FormulaSyntaxError(f"texto sobrando depois da fórmula: '{leftover[0]}'", leftover[1])
    relation_arities(result)
    return result
