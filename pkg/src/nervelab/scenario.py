"""Scenario files: named algebra/space definitions plus a list of jobs.

Grammar (one statement per line, '#' comments):

    trunc 4
    seed 7
    cap 1000000
    monoid Z2: elems 0,1; unit 0; mul 0*0=0, 0*1=1, 1*0=1, 1*1=0
    monoid Z3: builtin cyclic 3          # cyclic N | symmetric3 | zero-monoid
    action tr: Z2 on Z2 by translation   # or: left g.x=y, ...; right x.g=y, ...
    space C: circle
    space N2: nerve Z2
    space P: product C C                 # circle|point|simplex n|sphere n|
                                         # nerve M|wedgeofnerve M|product A B|
                                         # wedge A B|smash A B|corrupt A
    job verify N2
    job homology N2 upto 3
    job pi0 N2 expect 1
    job counterexample partial-monoid M0 sub 1,0 p 3
    job comparison Z2 upto 3
    job suspension C upto 3
    job cyclicbar-pi0 S3 expect 3
    job shear S3 expect bijective
    job loopgroup C samples 200

Space expressions may also be written inline in jobs, e.g.
``job homology nerve(Z2) upto 4``; parentheses and commas read as spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import algebra
from .algebra import AxiomViolation


class ScenarioError(Exception):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


@dataclass
class Job:
    kind: str
    args: dict
    line_no: int
    text: str


@dataclass
class Scenario:
    trunc: int = 4
    seed: int = 0
    cap: int = 10 ** 6
    monoids: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    situations: dict = field(default_factory=dict)
    augmentations: dict = field(default_factory=dict)
    space_exprs: dict = field(default_factory=dict)  # name -> token list
    loaded_spaces: dict = field(default_factory=dict)  # name -> SimplicialSet
    jobs: list = field(default_factory=list)


def _split_statements(body):
    return [p.strip() for p in body.split(";") if p.strip()]


def _parse_monoid(name, body, line_no):
    parts = _split_statements(body)
    if parts and parts[0].startswith("builtin"):
        kind = parts[0][len("builtin"):].strip()
        if kind.startswith("cyclic"):
            return algebra.cyclic_monoid(int(kind.split()[1]))
        if kind in ("symmetric3", "symmetric 3"):
            return algebra.symmetric_monoid(3)
        if kind in ("zero-monoid", "zero"):
            return algebra.zero_monoid()
        raise ScenarioError(line_no, f"unknown builtin monoid {kind!r}")
    elems, unit, table = None, None, {}
    for part in parts:
        if part.startswith("elems"):
            elems = [e.strip() for e in part[len("elems"):].split(",") if e.strip()]
        elif part.startswith("unit"):
            unit = part[len("unit"):].strip()
        elif part.startswith("mul"):
            for entry in part[len("mul"):].split(","):
                entry = entry.strip()
                if not entry:
                    continue
                lhs, _, rhs = entry.partition("=")
                a, _, b = lhs.partition("*")
                table[a.strip(), b.strip()] = rhs.strip()
        else:
            raise ScenarioError(line_no, f"unknown monoid clause {part!r}")
    if elems is None or unit is None:
        raise ScenarioError(line_no, "monoid needs 'elems' and 'unit'")
    got = algebra.monoid_from_table(name, elems, unit, table)
    if isinstance(got, AxiomViolation):
        raise ScenarioError(line_no, f"invalid monoid {name}: {got}")
    return got


def _parse_action(name, body, line_no, monoids):
    head, _, rest = body.partition(":")
    words = head.split()
    if len(words) < 3 or words[1] != "on":
        raise ScenarioError(line_no, "action header must be '<G> on <X> ...'")
    gname, xname = words[0], words[2]
    if gname not in monoids:
        raise ScenarioError(line_no, f"undefined monoid {gname!r}")
    if xname not in monoids:
        raise ScenarioError(line_no, f"undefined monoid {xname!r} (carrier)")
    G, X = monoids[gname], monoids[xname]
    if "by translation" in head:
        if gname != xname:
            raise ScenarioError(line_no, "translation action needs G on G")
        return algebra.translation_action(G)
    if "by trivial" in head:
        return algebra.trivial_action(G, X.elements)
    left, right = {}, {}
    for part in _split_statements(rest):
        if part.startswith("left") or part.startswith("right"):
            is_left = part.startswith("left")
            for entry in part.split(None, 1)[1].split(","):
                entry = entry.strip()
                if not entry:
                    continue
                lhs, _, out = entry.partition("=")
                a, _, b = lhs.partition(".")
                key = (a.strip(), b.strip())
                (left if is_left else right)[key] = out.strip()
        else:
            raise ScenarioError(line_no, f"unknown action clause {part!r}")
    got = algebra.check_action(G, X.elements, left, right)
    if isinstance(got, AxiomViolation):
        raise ScenarioError(line_no, f"invalid action {name}: {got}")
    return got


def _tokens(expr):
    return expr.replace("(", " ").replace(")", " ").replace(",", " ").split()


def parse_scenario(text, base_dir=None) -> Scenario:
    sc = Scenario()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "sset":
            # external simplicial set in the text format: sset <name> <path>
            import os

            from .sset import parse as parse_sset
            name, _, path = rest.partition(" ")
            path = path.strip()
            if base_dir is not None and not os.path.isabs(path):
                path = os.path.join(base_dir, path)
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    sc.loaded_spaces[name] = parse_sset(fh.read(), name=name)
            except (OSError, ValueError) as exc:
                raise ScenarioError(line_no, f"cannot load sset {path!r}: {exc}")
            sc.space_exprs[name] = [name]
            continue
        if key == "trunc":
            sc.trunc = int(rest)
            if sc.trunc <= 0:
                raise ScenarioError(line_no, "truncation must be positive")
        elif key == "seed":
            sc.seed = int(rest)
        elif key == "cap":
            sc.cap = int(rest)
        elif key == "monoid":
            name, _, body = rest.partition(":")
            name = name.strip()
            sc.monoids[name] = _parse_monoid(name, body.strip(), line_no)
        elif key == "action":
            name, _, body = rest.partition(":") if ":" in rest else (rest, "", "")
            name = name.strip()
            sc.actions[name] = _parse_action(name, body.strip() or rest, line_no,
                                             sc.monoids)
        elif key == "situation":
            # situation <name>: submonoid e1,e2 of <M>
            name, _, body = rest.partition(":")
            toks = _tokens(body)
            if len(toks) < 4 or toks[0] != "submonoid" or toks[-2] != "of":
                raise ScenarioError(line_no,
                                    "expected 'submonoid <elems> of <monoid>'")
            m = sc.monoids.get(toks[-1])
            if m is None:
                raise ScenarioError(line_no, f"undefined monoid {toks[-1]!r}")
            got = algebra.submonoid_situation(m, tuple(toks[1:-2]),
                                              name=name.strip())
            if isinstance(got, AxiomViolation):
                raise ScenarioError(line_no, f"invalid situation: {got}")
            sc.situations[name.strip()] = got
        elif key == "augmentation":
            # augmentation <name>: pointed-translation <G>
            name, _, body = rest.partition(":")
            toks = _tokens(body)
            if len(toks) != 2 or toks[0] != "pointed-translation":
                raise ScenarioError(line_no, "expected 'pointed-translation <G>'")
            g = sc.monoids.get(toks[1])
            if g is None:
                raise ScenarioError(line_no, f"undefined monoid {toks[1]!r}")
            sc.augmentations[name.strip()] = algebra.pointed_translation_instance(g)
        elif key == "space":
            name, _, body = rest.partition(":")
            name = name.strip()
            toks = _tokens(body.strip())
            _check_space_tokens(toks, sc, line_no)
            sc.space_exprs[name] = toks
        elif key == "job":
            sc.jobs.append(_parse_job(rest, line_no, sc))
        else:
            raise ScenarioError(line_no, f"unknown statement {key!r}")
    return sc


# arity of each space constructor; arguments are themselves expressions,
# except nerve/wedgeofnerve (a monoid name) and simplex/sphere (a number)
_SPACE_HEADS = {"circle": 0, "point": 0, "simplex": 1, "sphere": 1,
                "nerve": 1, "wedgeofnerve": 1, "wedgeof": 1, "product": 2,
                "wedge": 2, "smash": 2, "corrupt": 1}


def _consume_space(toks, pos, sc, line_no):
    """Validate one space expression starting at ``pos``; return next index."""
    if pos >= len(toks):
        raise ScenarioError(line_no, "empty space expression")
    head = toks[pos]
    if head in sc.space_exprs:
        return pos + 1
    if head not in _SPACE_HEADS:
        raise ScenarioError(line_no, f"unknown space {head!r}")
    pos += 1
    if head in ("nerve", "wedgeofnerve"):
        if pos >= len(toks) or toks[pos] not in sc.monoids:
            raise ScenarioError(line_no, f"{head} needs a defined monoid")
        return pos + 1
    if head == "wedgeof":
        if pos >= len(toks) or toks[pos] not in sc.situations:
            raise ScenarioError(line_no, "wedgeof needs a defined situation")
        return pos + 1
    if head in ("simplex", "sphere"):
        if pos >= len(toks) or not toks[pos].isdigit():
            raise ScenarioError(line_no, f"{head} needs a number")
        return pos + 1
    for _ in range(_SPACE_HEADS[head]):
        pos = _consume_space(toks, pos, sc, line_no)
    return pos


def _check_space_tokens(toks, sc, line_no):
    end = _consume_space(toks, 0, sc, line_no)
    if end != len(toks):
        raise ScenarioError(line_no, f"trailing tokens after space expression: "
                                     f"{' '.join(toks[end:])}")


def _need_monoid(sc, name, line_no):
    if name not in sc.monoids:
        raise ScenarioError(line_no, f"undefined monoid {name!r}")
    return name


def _parse_job(rest, line_no, sc) -> Job:
    toks = _tokens(rest)
    kind = toks[0]
    args = {}
    if kind in ("verify", "regression", "homology", "pi0", "suspension",
                "loopgroup", "build"):
        # one space expression followed by optional key/value pairs
        tail_keys = {"upto", "expect", "samples"}
        expr = []
        i = 1
        while i < len(toks) and toks[i] not in tail_keys:
            expr.append(toks[i])
            i += 1
        _check_space_tokens(expr, sc, line_no)
        args["space"] = expr
        while i < len(toks):
            args[toks[i]] = int(toks[i + 1])
            i += 2
    elif kind == "counterexample":
        if toks[1] != "partial-monoid":
            raise ScenarioError(line_no, "only 'counterexample partial-monoid' is known")
        args["monoid"] = _need_monoid(sc, toks[2], line_no)
        i = 3
        while i < len(toks):
            if toks[i] == "sub":
                j = i + 1
                subs = []
                while j < len(toks) and toks[j] != "p":
                    subs.append(toks[j])
                    j += 1
                args["sub"] = tuple(subs)
                i = j
            elif toks[i] == "p":
                args["p"] = int(toks[i + 1])
                i += 2
            else:
                raise ScenarioError(line_no, f"unknown counterexample clause {toks[i]!r}")
    elif kind == "comparison":
        if toks[1] in sc.augmentations:
            args["augmentation"] = toks[1]
        else:
            args["monoid"] = _need_monoid(sc, toks[1], line_no)
        args["upto"] = int(toks[toks.index("upto") + 1]) if "upto" in toks else 3
    elif kind == "cyclicbar-pi0":
        args["monoid"] = _need_monoid(sc, toks[1], line_no)
        if "expect" in toks:
            args["expect"] = int(toks[toks.index("expect") + 1])
    elif kind == "shear":
        if toks[1] in sc.actions:
            args["monoid"] = toks[1]
        else:
            args["monoid"] = _need_monoid(sc, toks[1], line_no)
        if "expect" in toks:
            args["expect"] = toks[toks.index("expect") + 1]
    else:
        raise ScenarioError(line_no, f"unknown job kind {kind!r}")
    return Job(kind, args, line_no, rest)
