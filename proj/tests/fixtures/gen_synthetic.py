#!/usr/bin/env python3
"""Writes the synthetic snippet corpus used by the trend and round-trip checks.

Usage: gen_synthetic.py OUT_DIR [COUNT] [SEED]

Output is a pure function of COUNT and SEED.
"""
import os
import random
import sys


def expr_int(rng, names):
    if names and rng.random() < 0.7:
        a = rng.choice(names)
        return rng.choice([a, f"{a} + {rng.randint(1, 9)}", f"{a} * 2",
                           f"{a} - 1"])
    return str(rng.randint(0, 20))


def statements(rng, depth, ints, strs, out, indent):
    pad = "    " * indent
    for _ in range(rng.randint(2, 5)):
        kind = rng.choice(["decl", "decl", "assign", "if", "for", "while",
                           "str", "append", "call", "array"])
        if kind == "decl" or not ints:
            name = f"v{len(ints) + indent * 10}"
            while name in ints:
                name += "x"
            out.append(f"{pad}int {name} = {expr_int(rng, ints)};")
            ints.append(name)
        elif kind == "assign":
            out.append(f"{pad}{rng.choice(ints)} = {expr_int(rng, ints)};")
        elif kind == "if" and depth < 2:
            out.append(f"{pad}if ({rng.choice(ints)} > {rng.randint(0, 9)}) {{")
            statements(rng, depth + 1, list(ints), list(strs), out, indent + 1)
            if rng.random() < 0.4:
                out.append(f"{pad}}} else {{")
                statements(rng, depth + 1, list(ints), list(strs), out,
                           indent + 1)
            out.append(f"{pad}}}")
        elif kind == "for" and depth < 2:
            i = f"i{indent}"
            out.append(f"{pad}for (int {i} = 0; {i} < {rng.randint(2, 9)}; "
                       f"{i}++) {{")
            statements(rng, depth + 1, ints + [i], list(strs), out, indent + 1)
            out.append(f"{pad}}}")
        elif kind == "while" and depth < 2:
            c = rng.choice(ints)
            out.append(f"{pad}while ({c} < {rng.randint(10, 30)}) {{")
            out.append(f"{pad}    {c}++;")
            statements(rng, depth + 1, list(ints), list(strs), out, indent + 1)
            out.append(f"{pad}}}")
        elif kind == "str":
            name = f"s{len(strs) + indent * 10}"
            while name in strs:
                name += "x"
            init = rng.choice(['""', '"" + ' + rng.choice(ints),
                               '"n=" + ' + rng.choice(ints),
                               'new String("t")'])
            out.append(f"{pad}String {name} = {init};")
            strs.append(name)
            if rng.random() < 0.5:
                out.append(f"{pad}{name} += {rng.choice(ints)};")
        elif kind == "append":
            arg = rng.choice(['"x"', '"ab"', rng.choice(ints)])
            out.append(f"{pad}sb.append({arg});")
        elif kind == "call":
            arg = rng.choice(strs) if strs else rng.choice(ints)
            out.append(f"{pad}System.out.println({arg});")
        elif kind == "array":
            out.append(f"{pad}data[{rng.randint(0, 3)}] = {expr_int(rng, ints)};")
        else:
            out.append(f"{pad}{rng.choice(ints)}++;")


def snippet(rng, index):
    lines = []
    methods = rng.randint(1, 2)
    wrapped = rng.random() < 0.6
    indent = 0 if wrapped else 1
    pad = "    " * indent
    if not wrapped:
        lines.append(f"public class Syn{index} {{")
    for m in range(methods):
        lines.append(f"{pad}int work{m}(int n, int[] data, StringBuilder sb) {{")
        body = []
        statements(rng, 0, ["n"], [], body, indent + 1)
        lines.extend(body)
        lines.append(f"{pad}    return n;")
        lines.append(f"{pad}}}")
        if m + 1 < methods:
            lines.append("")
    if not wrapped:
        lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    out_dir = sys.argv[1]
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 100
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 20260131
    rng = random.Random(seed)
    os.makedirs(out_dir, exist_ok=True)
    for i in range(count):
        with open(os.path.join(out_dir, f"syn{i:03d}.java"), "w") as f:
            f.write(snippet(rng, i))


if __name__ == "__main__":
    main()
