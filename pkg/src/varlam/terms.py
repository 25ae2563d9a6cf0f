"""Lambda-term representation and the basic syntactic operations.

Terms are immutable. Every node caches its free-variable set, its size and
whether it mentions a named constant, so the reducer can skip substitution
into subterms that do not mention the variable at all (the shared subterm is
returned as-is).
"""

from __future__ import annotations

import sys

# Reduction and substitution recurse on term depth; intermediate terms in the
# fixed-point suites get deep enough to outgrow the default limit.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


class LambdaError(Exception):
    """Base class for all errors raised by this package."""


class UnboundName(LambdaError):
    def __init__(self, name: str):
        super().__init__(f"unbound name: {name}")
        self.name = name


class UnexpandedConstant(LambdaError):
    def __init__(self, name: str):
        super().__init__(f"term contains unexpanded constant: {name}")
        self.name = name


_EMPTY = frozenset()


class Term:
    __slots__ = ()


class Var(Term):
    __slots__ = ("name", "free", "size", "has_const")
    __match_args__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        self.free = frozenset((name,))
        self.size = 1
        self.has_const = False

    def __repr__(self):
        return f"Var({self.name!r})"


class Lam(Term):
    __slots__ = ("binder", "body", "free", "size", "has_const")
    __match_args__ = ("binder", "body")

    def __init__(self, binder: str, body: Term):
        self.binder = binder
        self.body = body
        bf = body.free
        self.free = bf - {binder} if binder in bf else bf
        self.size = 1 + body.size
        self.has_const = body.has_const

    def __repr__(self):
        return f"Lam({self.binder!r}, {self.body!r})"


class App(Term):
    __slots__ = ("fun", "arg", "free", "size", "has_const")
    __match_args__ = ("fun", "arg")

    def __init__(self, fun: Term, arg: Term):
        self.fun = fun
        self.arg = arg
        self.free = fun.free | arg.free
        self.size = 1 + fun.size + arg.size
        self.has_const = fun.has_const or arg.has_const

    def __repr__(self):
        return f"App({self.fun!r}, {self.arg!r})"


class Const(Term):
    """A reference to a named definition in an Env (e.g. K, Succ, VarPhi)."""

    __slots__ = ("name", "free", "size", "has_const")
    __match_args__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        self.free = _EMPTY
        self.size = 1
        self.has_const = True

    def __repr__(self):
        return f"Const({self.name!r})"


def apply(fun: Term, *args: Term) -> Term:
    """Left-associated application fun a1 ... an."""
    for a in args:
        fun = App(fun, a)
    return fun


def lams(binders, body: Term) -> Term:
    """Nested abstraction over a sequence of binder names."""
    for b in reversed(list(binders)):
        body = Lam(b, body)
    return body


def free_vars(t: Term) -> set[str]:
    """Free variables of t.  Constants contribute nothing (they are closed)."""
    return set(t.free)


def size(t: Term) -> int:
    """|v| = 1, |lam v.P| = 1 + |P|, |(P Q)| = 1 + |P| + |Q|.

    Defined on constant-free terms only; expand constants first.
    """
    if t.has_const:
        raise UnexpandedConstant(_first_const(t))
    return t.size


def _first_const(t: Term) -> str:
    stack = [t]
    while stack:
        u = stack.pop()
        c = u.__class__
        if c is Const:
            return u.name
        if c is App:
            if u.arg.has_const:
                stack.append(u.arg)
            if u.fun.has_const:
                stack.append(u.fun)
        elif c is Lam:
            stack.append(u.body)
    raise AssertionError("has_const set but no Const found")


def fresh_name(base: str, avoid) -> str:
    """Deterministic fresh name: prime the base until it is not in avoid."""
    name = base + "'"
    while name in avoid:
        name += "'"
    return name


def alpha_eq(a: Term, b: Term) -> bool:
    """Identity up to consistent renaming of binders.  Const compares by name."""
    if a is b:
        return True
    return _alpha(a, b, {}, {}, 0)


def _alpha(a: Term, b: Term, ea: dict, eb: dict, depth: int) -> bool:
    ca = a.__class__
    if ca is not b.__class__:
        return False
    if ca is Var:
        return ea.get(a.name, a.name) == eb.get(b.name, b.name)
    if ca is App:
        return _alpha(a.fun, b.fun, ea, eb, depth) and _alpha(a.arg, b.arg, ea, eb, depth)
    if ca is Lam:
        ea2 = dict(ea)
        eb2 = dict(eb)
        ea2[a.binder] = depth
        eb2[b.binder] = depth
        return _alpha(a.body, b.body, ea2, eb2, depth + 1)
    return a.name == b.name  # Const


def substitute(t: Term, name: str, repl: Term) -> Term:
    """Capture-avoiding t[name := repl]; binders are primed when needed."""
    if name not in t.free:
        return t
    c = t.__class__
    if c is Var:
        return repl
    if c is App:
        return App(substitute(t.fun, name, repl), substitute(t.arg, name, repl))
    # Lam, with name free in the body (and binder != name, else name not free)
    binder = t.binder
    body = t.body
    if binder in repl.free:
        new = fresh_name(binder, repl.free | body.free)
        body = substitute(body, binder, Var(new))
        binder = new
    return Lam(binder, substitute(body, name, repl))


def expand_consts(t: Term, env) -> Term:
    """Replace every Const by its (already closed) definition from env."""
    if not t.has_const:
        return t
    c = t.__class__
    if c is Const:
        return env.expanded(t.name)
    if c is App:
        return App(expand_consts(t.fun, env), expand_consts(t.arg, env))
    return Lam(t.binder, expand_consts(t.body, env))


def alpha_normal(t: Term) -> Term:
    """Rename binders to v0, v1, ... in traversal order (used for hashing)."""
    counter = [0]

    def go(u: Term, ren: dict) -> Term:
        c = u.__class__
        if c is Var:
            return Var(ren.get(u.name, u.name))
        if c is App:
            return App(go(u.fun, ren), go(u.arg, ren))
        if c is Lam:
            fresh = f"v{counter[0]}"
            counter[0] += 1
            ren2 = dict(ren)
            ren2[u.binder] = fresh
            return Lam(fresh, go(u.body, ren2))
        return u

    return go(t, {})
