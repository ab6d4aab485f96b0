"""Tabulate when A(R, n) is Frobenius for the quasi-Frobenius catalog algebras.

For each algebra and n the table lists the Nakayama permutation, the multiplicities,
the combinatorial prediction (m_i = m at pi^(n-2)(i) for all i) and the direct verdict
of the form search on A(R, n).

    python scripts/theorem_f_table.py [--max-n 6]
"""

import argparse

from gradedfrob.catalog import make_example
from gradedfrob.claims import QF_SUITE
from gradedfrob.frobenius import FrobeniusData, frobenius_form, nakayama_permutation
from gradedfrob.graded import build_A_dual


def predicted(pi, m, n):
    perm = list(range(len(pi)))
    for _ in range(n - 2):
        perm = [pi[i] for i in perm]
    return all(m[i] == m[perm[i]] for i in range(len(m)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--extra-nakayama", action="store_true",
                    help="also run nakayama_pq with (p, q) = (1, 2) and (3, 1)")
    args = ap.parse_args()

    cases = list(QF_SUITE)
    if args.extra_nakayama:
        cases += [("nakayama_pq", {"p": 1, "q": 2}), ("nakayama_pq", {"p": 3, "q": 1})]
    print(f"{'algebra':<32} {'n':>2} {'dim A':>6}  {'pi':<8} {'m':<8} predicted  direct")
    disagreements = 0
    for eid, params in cases:
        R = make_example(eid, params)
        pi, m = nakayama_permutation(R)
        tag = eid + ("" if not params else " " + ",".join(f"{k}={v}" for k, v in params.items()))
        for n in range(2, args.max_n + 1):
            G = build_A_dual(R, n)
            direct = isinstance(frobenius_form(G.algebra), FrobeniusData)
            pred = predicted(pi, m, n)
            disagreements += pred != direct
            print(f"{tag:<32} {n:>2} {G.dim:>6}  {str([p + 1 for p in pi]):<8} {str(m):<8} "
                  f"{str(pred):<10} {direct}")
    print(f"disagreements: {disagreements}")


if __name__ == "__main__":
    main()
