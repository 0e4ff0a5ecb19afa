"""Dense-exponent multivariate polynomials with exact coefficients.

Coefficients are Python ints or Fractions; exponent vectors are tuples
aligned with a fixed variable list.  This covers what the geometry
needs: products, powers, substitution of polynomials for variables,
partial derivatives, homogeneous parts, and a small expression parser
for fixture files.
"""

from __future__ import annotations

from fractions import Fraction
import re


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = self.terms.get(tuple(e), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def constant(cls, vars, c):
        return cls(vars, {tuple([0] * len(vars)): c} if c else None)

    @classmethod
    def variable(cls, vars, name):
        i = tuple(vars).index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def monomial(cls, vars, exps, c=1):
        return cls(vars, {tuple(exps): c})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d):
        return Poly(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def lowest_part(self):
        if self.is_zero():
            return self
        d = min(sum(e) for e in self.terms)
        return self.homogeneous_part(d)

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("polynomials over different variable lists")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.vars, out)

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def partial(self, name):
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = out.get(tuple(e2), 0) + c * e[i]
        return Poly(self.vars, out)

    def substitute(self, images: dict, new_vars=None):
        """Map each variable to a polynomial (or constant) and expand.

        ``images`` sends variable names to Polys over ``new_vars`` (taken
        from an arbitrary image if omitted); unmapped variables are not
        allowed.
        """
        if new_vars is None:
            for img in images.values():
                if isinstance(img, Poly):
                    new_vars = img.vars
                    break
            else:
                raise ValueError("cannot infer target variables")
        imgs = []
        for v in self.vars:
            if v not in images:
                raise ValueError(f"no image for variable {v!r}")
            img = images[v]
            if not isinstance(img, Poly):
                img = Poly.constant(new_vars, img)
            imgs.append(img)
        # cache powers per variable
        powers = []
        maxdeg = [0] * len(self.vars)
        for e in self.terms:
            for i, k in enumerate(e):
                maxdeg[i] = max(maxdeg[i], k)
        for i, img in enumerate(imgs):
            p = [Poly.constant(new_vars, 1)]
            for _ in range(maxdeg[i]):
                p.append(p[-1] * img)
            powers.append(p)
        out = Poly.zero(new_vars)
        for e, c in self.terms.items():
            term = Poly.constant(new_vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            out = out + term
        return out

    def evaluate(self, point: dict):
        total = 0
        for e, c in self.terms.items():
            val = c
            for v, k in zip(self.vars, e):
                if k:
                    val = val * Fraction(point[v]) ** k
            total += val
        return total

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    bits = []
    for e in sorted(p.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
        c = p.terms[e]
        mono = "*".join(
            f"{v}^{k}" if k > 1 else v for v, k in zip(p.vars, e) if k
        )
        if not mono:
            bits.append(f"{'+' if c > 0 else '-'} {abs(c)}")
        elif abs(c) == 1:
            bits.append(f"{'+' if c > 0 else '-'} {mono}")
        else:
            bits.append(f"{'+' if c > 0 else '-'} {abs(c)}*{mono}")
    out = " ".join(bits)
    return out[2:] if out.startswith("+ ") else "-" + out[2:] if out.startswith("- ") else out


_TOKEN = re.compile(r"\s*(\*\*|\^|[()+*/-]|[0-9]+|[A-Za-z_][A-Za-z0-9_]*)")


def parse_poly(text: str, vars) -> Poly:
    """Parse +, -, *, ^ (or **), parentheses, integers and variable names."""
    vars = tuple(vars)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    def parse_expr():
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        node = parse_term() * sign
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_power()
        while True:
            t = peek()
            if t == "*":
                take()
                node = node * parse_power()
            elif t is not None and (t == "(" or t[0].isalnum() or t[0] == "_"):
                # implicit multiplication: 2x, x0x1, 3(x+y)
                node = node * parse_power()
            else:
                return node

    def parse_power():
        base = parse_atom()
        if peek() in ("^", "**"):
            take()
            neg = False
            if peek() == "-":
                take()
                neg = True
            exp = take()
            if not exp or not exp.isdigit() or neg:
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(exp)
        return base

    def parse_atom():
        t = take()
        if t == "(":
            node = parse_expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return node
        if t == "-":
            return -parse_atom()
        if t is None:
            raise ValueError("unexpected end of expression")
        if t.isdigit():
            return Poly.constant(vars, int(t))
        if t in vars:
            return Poly.variable(vars, t)
        raise ValueError(f"unknown variable {t!r}")

    out = parse_expr()
    if peek() is not None:
        raise ValueError(f"trailing input near {peek()!r}")
    return out
