"""Conformance report files: a delimited table plus summary figures.

Given corpus results this writes ``results.tsv`` (tab-separated, one row
per case) and ``summary.png`` (pass/fail counts per descriptor family)
into a target directory.  Figures render through the non-interactive
backend so report generation works in headless runs.
"""

from __future__ import annotations

import os

from .corpus import CaseResult, escape_text

# descriptor families recognized when classifying a format string
_FAMILY_LETTERS = {
    "I": "integer",
    "F": "fixed",
    "E": "exponential",
    "L": "logical",
    "A": "character",
}


def categorize(format_text: str) -> str:
    """Classify a format by the data descriptors it uses.

    Quoted literals are skipped so their content never counts; a format
    using several families is ``mixed`` and one using none is
    ``text-only``.
    """
    families: set[str] = set()
    quote: str | None = None
    i = 0
    while i < len(format_text):
        ch = format_text[i]
        if quote is not None:
            if ch == quote:
                quote = None
            i += 1
            continue
        if ch in "'\"":
            quote = ch
            i += 1
            continue
        upper = ch.upper()
        if upper in _FAMILY_LETTERS:
            families.add(_FAMILY_LETTERS[upper])
        elif upper == "S":
            # SP/SS sign control, not a data descriptor
            i += 1
        i += 1
    if not families:
        return "text-only"
    if len(families) == 1:
        return families.pop()
    return "mixed"


def write_table(results: list[CaseResult], path: str) -> None:
    """Write one tab-separated row per case, escaped for single lines."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("line\tstatus\tformat\tvalues\texpected\tactual\n")
        for result in results:
            case = result.case
            actual = result.error if result.actual is None else result.actual
            handle.write(
                "\t".join(
                    (
                        str(case.line_no),
                        "pass" if result.ok else "fail",
                        escape_text(case.format_text),
                        escape_text(" ".join(repr(v) for v in case.values)),
                        escape_text(case.expected),
                        escape_text(actual or ""),
                    )
                )
                + "\n"
            )


def write_figure(results: list[CaseResult], path: str) -> None:
    """Render stacked pass/fail bars per descriptor family."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    tallies: dict[str, list[int]] = {}
    for result in results:
        family = categorize(result.case.format_text)
        tally = tallies.setdefault(family, [0, 0])
        tally[0 if result.ok else 1] += 1

    families = sorted(tallies)
    passes = [tallies[f][0] for f in families]
    fails = [tallies[f][1] for f in families]
    total = sum(passes) + sum(fails)
    rate = (sum(passes) / total * 100.0) if total else 0.0

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(families, passes, label="pass", color="#2a9d8f")
    ax.bar(families, fails, bottom=passes, label="fail", color="#e76f51")
    ax.set_ylabel("cases")
    ax.set_title(f"Conformance by descriptor family ({rate:.1f}% pass)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(results: list[CaseResult], out_dir: str) -> tuple[str, str]:
    """Write the table and figure into ``out_dir``; returns their paths."""
    os.makedirs(out_dir, exist_ok=True)
    table_path = os.path.join(out_dir, "results.tsv")
    figure_path = os.path.join(out_dir, "summary.png")
    write_table(results, table_path)
    write_figure(results, figure_path)
    return table_path, figure_path
