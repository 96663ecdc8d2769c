"""Deterministic synthetic expository text with chapter-local concept structure.

The generator mimics a textbook: a handful of core concepts recur
throughout, each chapter introduces its own concepts one after another and
keeps revisiting them, and sentences occasionally look back at earlier
chapters. Every template word outside the slots is a stop word, so keyphrase
extraction sees exactly the concept phrases plus one filler word per
sentence.
"""
from __future__ import annotations

import numpy as np

CORE = [
    "linear transformation", "vector space", "inner product", "square matrix",
    "determinant function", "eigenvalue problem", "basis vectors", "orthogonal projection",
    "null space", "column space",
]

CHAPTERS = [
    ["gaussian elimination", "echelon form", "pivot column", "augmented matrix",
     "elementary operation", "triangular system"],
    ["subspace criterion", "spanning family", "linear independence", "coordinate mapping",
     "dimension theorem", "direct summand"],
    ["kernel decomposition", "image factorization", "quotient structure", "isomorphism class",
     "rank nullity", "dual functional"],
    ["cofactor expansion", "permutation parity", "volume scaling", "adjugate formula",
     "cramer rule", "multilinear alternation"],
    ["characteristic polynomial", "eigenvector chain", "diagonalizable operator",
     "algebraic multiplicity", "geometric multiplicity", "similarity invariant"],
    ["orthonormal frame", "gram schmidt", "residual minimization", "normal equations",
     "projection operator", "orthogonal complement"],
    ["symmetric operator", "spectral theorem", "quadratic form", "positive definite",
     "principal axes", "rayleigh quotient"],
    ["singular value", "polar decomposition", "pseudoinverse solution", "condition number",
     "matrix approximation", "spectral norm"],
    ["jordan block", "nilpotent operator", "generalized eigenspace", "minimal polynomial",
     "cyclic subspace", "companion matrix"],
    ["bilinear pairing", "tensor product", "exterior algebra", "hermitian adjoint",
     "unitary group", "trace functional"],
]

FILLERS = [
    "consider", "compute", "describe", "examine", "recall", "observe", "establish",
    "illustrate", "discuss", "emphasize", "verify", "motivate", "summarize",
    "formalize", "revisit", "contrast", "generalize", "simplify", "interpret",
    "visualize", "derive", "exhibit", "outline", "analyze", "introduce",
    "investigate", "characterize", "highlight", "construct", "demonstrate",
    "reconsider", "clarify", "abstract", "organize", "estimate", "predict",
    "classify", "sketch", "explore", "connect", "combine", "evaluate", "justify",
    "compare", "identify", "refine", "extend", "deduce", "reformulate",
    "understand", "apply", "translate", "encounter", "address", "approach",
    "isolate", "transform", "normalize", "relate", "express", "decompose",
    "parametrize", "enumerate", "locate", "measure", "formulate", "represent",
    "specialize", "calculate", "tabulate", "inspect", "describe",
]

TEMPLATES_2 = [
    "we {f} the {a} and the {b} .",
    "here we {f} how the {a} is related to the {b} .",
    "in this section we {f} the {a} together with the {b} .",
    "the {a} can be used to {f} the {b} .",
    "we now {f} the {a} by means of the {b} .",
]

TEMPLATES_3 = [
    "we {f} the {a} , the {b} and the {c} .",
    "using the {a} we {f} the {b} and then the {c} .",
    "the {a} and the {b} are both used to {f} the {c} .",
]

TEMPLATES_1 = [
    "we {f} the {a} .",
    "let us {f} the {a} once more .",
]


def all_concepts() -> list[str]:
    return CORE + [c for ch in CHAPTERS for c in ch]


def generate_exposition(n_sentences: int = 500, seed: int = 0,
                        p_third: float = 0.35, p_core: float = 0.3,
                        p_lookback: float = 0.1) -> str:
    """Synthetic plaintext of ``n_sentences`` sentences, one per line."""
    rng = np.random.default_rng(seed)
    fillers = sorted(set(FILLERS))
    n_ch = len(CHAPTERS)
    per_chapter = n_sentences // n_ch
    core_known: list[str] = []
    seen_local: list[str] = []
    lines = []
    for s in range(n_sentences):
        ch = min(s // per_chapter, n_ch - 1)
        pos = s - ch * per_chapter
        local_all = CHAPTERS[ch]
        # chapter concepts appear one at a time, roughly every seventh sentence
        n_local = min(len(local_all), 1 + pos // 7)
        local = local_all[:n_local]
        # core concepts are introduced early, one every fifth sentence
        while len(core_known) < min(len(CORE), 1 + s // 5):
            core_known.append(CORE[len(core_known)])

        focus = local[-1] if rng.random() < 0.5 else local[rng.integers(len(local))]
        picked = [focus]
        k = 3 if rng.random() < p_third else 2
        while len(picked) < k:
            r = rng.random()
            if r < p_core and core_known:
                pool = core_known
            elif r < p_core + p_lookback and seen_local:
                pool = seen_local
            else:
                pool = local
            cand = pool[rng.integers(len(pool))]
            if cand not in picked:
                picked.append(cand)
            elif len(set(local) | set(core_known) | set(seen_local)) <= len(picked):
                break
        f = fillers[s % len(fillers)]
        if len(picked) == 1:
            tpl = TEMPLATES_1[rng.integers(len(TEMPLATES_1))]
            lines.append(tpl.format(f=f, a=picked[0]))
        elif len(picked) == 2:
            tpl = TEMPLATES_2[rng.integers(len(TEMPLATES_2))]
            lines.append(tpl.format(f=f, a=picked[0], b=picked[1]))
        else:
            tpl = TEMPLATES_3[rng.integers(len(TEMPLATES_3))]
            lines.append(tpl.format(f=f, a=picked[0], b=picked[1], c=picked[2]))
        if pos == per_chapter - 1 or s == n_sentences - 1:
            seen_local.extend(c for c in local if c not in seen_local)
    return "\n".join(_capitalize(ln.replace(" .", ".").replace(" ,", ",")) for ln in lines) + "\n"


def _capitalize(line: str) -> str:
    return line[:1].upper() + line[1:]
