#!/usr/bin/env python3
"""Generate the bundled Java micro-corpus.

Every file is a class of static methods over int, long, boolean, String and
int[] so the equivalence interpreter can execute them. Each file draws its
identifiers from its own vocabulary slice, which is what lets a token model
tell training files from held-out ones.

Usage: gen_corpus.py OUT_DIR [--train N] [--test N] [--seed S]
"""

import argparse
import random
from pathlib import Path

WORDS = """
account active adjust amount anchor apply arena array audit backlog balance
batch beacon bias bound bucket budget buffer cache carry ceiling channel
chunk cipher clamp cluster column commit counter credit cursor cycle debit
decay delta depth digest domain draft drift edge entry epoch error event
factor fault field filter flag flow focus frame gauge grade grain graph
guard harbor hash heap height hint hold index input interval item journal
kernel key label ladder lane layer ledger level limit line link load lock
margin mark mask match matrix median member merge meter mode module motion
node noise offset order origin output pace packet page pair parcel parity
path peak pivot pixel plan point pool port prefix price probe queue quota
radius range rank rate ratio reader record region relay remain report rest
result retry ring round route row sample scale scan score seed segment
shard shift signal size slack slice slot source span spare stack stage state
step stock store stream stride sum supply table tally target task tempo
term tick tier token total trace track trend trial tuple unit usage value
vector velocity volume wave weight width window word zone
""".split()

STRINGS = ["alpha", "beta", "gamma", "delta", "omega", "north", "south", "idle", "busy", "ready"]
TYPES = ["int", "int", "int", "long", "boolean", "String", "int[]"]
IND = "    "


def camel(words):
    return words[0] + "".join(w[:1].upper() + w[1:] for w in words[1:])


class Method:
    """Builds one static method body statement by statement."""

    def __init__(self, rng, vocab):
        self.rng = rng
        self.vocab = vocab
        self.used = set()
        self.vars = {}  # name -> type
        self.lines = []

    def fresh(self, parts=None):
        while True:
            n = parts or self.rng.choice([1, 2, 2, 3])
            name = camel(self.rng.sample(self.vocab, n))
            if name not in self.used:
                self.used.add(name)
                return name

    def of(self, type_):
        names = [n for n, t in self.vars.items() if t == type_]
        return self.rng.choice(names) if names else None

    def emit(self, depth, text):
        self.lines.append(IND * depth + text)

    def int_atom(self):
        v = self.of("int")
        if v is None or self.rng.random() < 0.3:
            return str(self.rng.randint(0, 50))
        return v

    def int_expr(self):
        a, b = self.int_atom(), self.int_atom()
        op = self.rng.choice(["+", "-", "*", "+", "-"])
        if self.rng.random() < 0.4:
            return f"{a} {op} {b} {self.rng.choice(['+', '-'])} {self.int_atom()}"
        return f"{a} {op} {b}"

    def cond(self):
        a, b = self.int_atom(), self.int_atom()
        op = self.rng.choice(["<", ">", "<=", ">=", "==", "!="])
        return f"{a} {op} {b}"

    # ---- statement templates ------------------------------------------

    def t_decl(self, d):
        name = self.fresh()
        self.emit(d, f"int {name} = {self.int_expr()};")
        self.vars[name] = "int"

    def t_multi_decl(self, d):
        a, b = self.fresh(), self.fresh()
        self.emit(d, f"int {a} = {self.int_atom()}, {b} = {self.rng.randint(1, 9)};")
        self.vars[a] = self.vars[b] = "int"

    def t_adjacent_decls(self, d):
        a, b = self.fresh(), self.fresh()
        self.emit(d, f"int {a} = {self.rng.randint(0, 9)};")
        self.emit(d, f"int {b} = {self.rng.randint(0, 9)};")
        self.vars[a] = self.vars[b] = "int"

    def t_for_sum(self, d):
        arr = self.of("int[]")
        acc = self.fresh()
        i = self.rng.choice(["i", "j", "k"])
        self.emit(d, f"int {acc} = 0;")
        if arr:
            self.emit(d, f"for (int {i} = 0; {i} < {arr}.length; {i}++) {{")
            self.emit(d + 1, f"{acc} += {arr}[{i}];")
        else:
            bound = self.rng.randint(3, 12)
            self.emit(d, f"for (int {i} = 0; {i} < {bound}; {i}++) {{")
            self.emit(d + 1, f"{acc} += {i} * {self.rng.randint(1, 4)};")
        self.emit(d, "}")
        self.vars[acc] = "int"

    def t_while(self, d):
        v = self.fresh()
        steps = self.fresh()
        self.emit(d, f"int {v} = {self.int_atom()};")
        self.emit(d, f"int {steps} = 0;")
        self.emit(d, f"while ({v} > {self.rng.randint(0, 5)}) {{")
        self.emit(d + 1, f"{v} = {v} / 2;")
        self.emit(d + 1, f"{steps}++;")
        self.emit(d, "}")
        self.vars[v] = self.vars[steps] = "int"

    def t_do(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        c = self.fresh()
        self.emit(d, f"int {c} = 0;")
        self.emit(d, "do {")
        self.emit(d + 1, f"{c} += {self.rng.randint(1, 3)};")
        self.emit(d, f"}} while ({c} < {self.rng.randint(2, 9)});")
        self.vars[c] = "int"

    def t_if_chain(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        r = self.fresh()
        self.emit(d, f"int {r};")
        self.emit(d, f"if ({v} > {self.rng.randint(10, 40)}) {{")
        self.emit(d + 1, f"{r} = {self.int_expr()};")
        self.emit(d, f"}} else if ({v} < {self.rng.randint(-20, 5)}) {{")
        self.emit(d + 1, f"{r} = {self.int_atom()};")
        self.emit(d, "} else {")
        self.emit(d + 1, f"{r} = {self.rng.randint(0, 9)};")
        self.emit(d, "}")
        self.vars[r] = "int"

    def t_else_block_if(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        r = self.fresh()
        self.emit(d, f"int {r} = 0;")
        self.emit(d, f"if ({v} % 2 == 0) {{")
        self.emit(d + 1, f"{r} = {v} / 2;")
        self.emit(d, "} else {")
        self.emit(d + 1, f"if ({v} > 0) {{")
        self.emit(d + 2, f"{r} = {v} * 3 + 1;")
        self.emit(d + 1, "}")
        self.emit(d, "}")
        self.vars[r] = "int"

    def t_switch(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        r = self.fresh()
        self.emit(d, f"int {r} = 0;")
        self.emit(d, f"switch ({v}) {{")
        for c in sorted(self.rng.sample(range(0, 8), self.rng.randint(2, 4))):
            self.emit(d + 1, f"case {c}:")
            self.emit(d + 2, f"{r} = {self.int_expr()};")
            self.emit(d + 2, "break;")
        self.emit(d + 1, "default:")
        self.emit(d + 2, f"{r} = {self.rng.randint(-5, 5)};")
        self.emit(d, "}")
        self.vars[r] = "int"

    def t_string_switch(self, d):
        s = self.of("String")
        if s is None:
            return self.t_decl(d)
        r = self.fresh()
        self.emit(d, f"int {r} = {self.rng.randint(0, 3)};")
        self.emit(d, f"switch ({s}) {{")
        for lit in self.rng.sample(STRINGS, 2):
            self.emit(d + 1, f'case "{lit}":')
            self.emit(d + 2, f"{r} += {self.rng.randint(1, 9)};")
            self.emit(d + 2, "break;")
        self.emit(d, "}")
        self.vars[r] = "int"

    def t_ternary(self, d):
        a, b = self.int_atom(), self.int_atom()
        m = self.fresh()
        self.emit(d, f"int {m} = {a} > {b} ? {a} : {b};")
        self.vars[m] = "int"

    def t_if_assign(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        self.emit(d, f"if ({self.cond()}) {{")
        self.emit(d + 1, f"{v} = {self.int_expr()};")
        self.emit(d, "} else {")
        self.emit(d + 1, f"{v} = {self.int_atom()};")
        self.emit(d, "}")

    def t_and_if(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        self.emit(d, f"if ({self.cond()} && {self.cond()}) {{")
        self.emit(d + 1, f"{v} += {self.rng.randint(1, 7)};")
        self.emit(d, "}")

    def t_continue(self, d):
        acc = self.fresh()
        i = self.rng.choice(["n", "p", "q"])
        self.emit(d, f"int {acc} = 0;")
        self.emit(d, f"for (int {i} = 0; {i} < {self.rng.randint(4, 10)}; {i}++) {{")
        self.emit(d + 1, f"if ({i} % {self.rng.randint(2, 3)} == 0) {{")
        self.emit(d + 2, "continue;")
        self.emit(d + 1, "}")
        self.emit(d + 1, f"{acc} += {i};")
        self.emit(d, "}")
        self.vars[acc] = "int"

    def t_postfix_assign(self, d):
        v = self.of("int")
        if v is None:
            return self.t_decl(d)
        y = self.fresh()
        self.emit(d, f"int {y} = {v}++;")
        self.vars[y] = "int"

    def t_infix(self, d):
        t = self.fresh()
        self.emit(d, f"int {t} = {self.int_atom()} + {self.int_atom()} * 2 - {self.int_atom()};")
        self.vars[t] = "int"

    def t_string_equals(self, d):
        s = self.of("String")
        v = self.of("int")
        if s is None or v is None:
            return self.t_decl(d)
        self.emit(d, f'if ({s}.equals("{self.rng.choice(STRINGS)}")) {{')
        self.emit(d + 1, f"{v} -= {self.rng.randint(1, 5)};")
        self.emit(d, "}")

    def t_flag(self, d):
        f = self.fresh()
        self.emit(d, f"boolean {f} = {self.cond()};")
        self.vars[f] = "boolean"

    def t_long(self, d):
        n = self.fresh()
        self.emit(d, f"long {n} = {self.int_atom()} * {self.rng.randint(1000, 99999)}L;")
        self.vars[n] = "long"

    def t_comment(self, d):
        words = self.rng.sample(self.vocab, 3)
        self.emit(d, f"// {words[0]} the {words[1]} before {words[2]}")

    def t_concat(self, d):
        s = self.of("String")
        v = self.of("int")
        if s is None or v is None:
            return self.t_decl(d)
        self.emit(d, f'{s} = {s} + "-" + {v};')

    TEMPLATES = [
        "t_decl", "t_multi_decl", "t_adjacent_decls", "t_for_sum", "t_while", "t_do",
        "t_if_chain", "t_else_block_if", "t_switch", "t_string_switch", "t_ternary",
        "t_if_assign", "t_and_if", "t_continue", "t_postfix_assign", "t_infix",
        "t_string_equals", "t_flag", "t_long", "t_comment", "t_concat",
    ]

    def build(self, name):
        params = []
        for _ in range(self.rng.randint(1, 3)):
            p = self.fresh(1)
            t = self.rng.choice(TYPES)
            params.append(f"{t} {p}")
            self.vars[p] = t
        if "int" not in self.vars.values():
            p = self.fresh(1)
            params.append(f"int {p}")
            self.vars[p] = "int"
        for _ in range(self.rng.randint(3, 7)):
            getattr(self, self.rng.choice(self.TEMPLATES))(2)
        ret_type = self.rng.choice(["int", "int", "long", "boolean", "String"])
        ints = [n for n, t in self.vars.items() if t == "int"]
        if ret_type == "int":
            ret = " + ".join(self.rng.sample(ints, min(len(ints), 3)))
        elif ret_type == "long":
            ret = f"{self.of('long') or self.rng.choice(ints)} + {self.rng.choice(ints)}"
        elif ret_type == "boolean":
            ret = f"{self.rng.choice(ints)} > {self.rng.choice(ints)}"
        else:
            s = self.of("String")
            ret = f'{s} + ":" + {self.rng.choice(ints)}' if s else f'"" + {self.rng.choice(ints)}'
        self.emit(2, f"return {ret};")
        head = f"{IND}static {ret_type} {name}({', '.join(params)}) {{"
        return "\n".join([head] + self.lines + [IND + "}"])


def make_file(rng, index):
    vocab = rng.sample(WORDS, 24)
    cls = camel(rng.sample(vocab, 2))
    cls = cls[:1].upper() + cls[1:] + str(index)
    out = [f"package corpus.{rng.choice(['core', 'util', 'io', 'calc'])};", ""]
    out.append("/**")
    out.append(f" * {' '.join(rng.sample(vocab, 5)).capitalize()}.")
    out.append(" */")
    out.append(f"public class {cls} {{")
    methods = []
    used = set()
    for _ in range(rng.randint(2, 4)):
        while True:
            name = camel(rng.sample(vocab, 2))
            if name not in used:
                used.add(name)
                break
        methods.append(Method(rng, vocab).build(name))
    out.append("\n\n".join(methods))
    out.append("}")
    return cls, "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", type=Path)
    ap.add_argument("--train", type=int, default=60)
    ap.add_argument("--test", type=int, default=60)
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    index = 0
    for split, count in (("train", args.train), ("test", args.test)):
        d = args.out / split
        d.mkdir(parents=True, exist_ok=True)
        for old in d.glob("*.java"):
            old.unlink()
        for _ in range(count):
            cls, text = make_file(rng, index)
            (d / f"{cls}.java").write_text(text)
            index += 1


if __name__ == "__main__":
    main()
