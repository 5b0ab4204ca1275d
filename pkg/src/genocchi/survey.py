"""Survey orchestration: classify every prime up to x, compare experimental
irregularity ratios per progression against the conjectured and lower-bound
ratios, and emit the result tables as text, CSV, or JSON.

Denominator convention: the denominator of every experimental ratio counts
*all* primes <= x in the progression, including 2 and the base ell itself;
2 and 3 are never irregular, while p = ell > 3 counts as G-irregular. This
convention reproduces the published reference ratios exactly (the ell = 2
all-primes ratio times pi(10^5) is an integer).
"""

from __future__ import annotations

import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .classify import PrimeClassification, b_irregular_pairs, classify_prime
from .density import conjectured_ratio, lower_bound_ratio
from .modarith import sieve_primes

__all__ = [
    "SurveyError",
    "SurveyConfig",
    "SurveyRow",
    "ClassificationCache",
    "resolve_cache_dir",
    "run_survey",
    "run_table",
    "emit_table",
    "parse_rows_csv",
    "TABLE_PRESETS",
]

VARIANTS = ("G", "Hminus", "Hplus")
FORMATS = ("text", "csv", "json")

CACHE_ENV = "GENOCCHI_CACHE_DIR"
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "genocchi"

CSV_HEADER = (
    "ell,d,a,x,count_irregular,count_primes,experimental,conjectured,lower_bound,variant"
)

_FLAG_FIELD = {
    "G": "g_irregular",
    "Hminus": "h_minus_irregular",
    "Hplus": "h_plus_irregular",
}


class SurveyError(RuntimeError):
    pass


@dataclass(frozen=True)
class SurveyConfig:
    ell: int
    x: int
    progressions: tuple[tuple[int, int], ...] = ((1, 1),)
    variants: tuple[str, ...] = ("G",)
    threads: int = 0  # 0 means use all available cores
    cache_dir: Path | str | None = None
    output_format: str = "text"
    quiet: bool = False
    deterministic: bool = False

    def __post_init__(self):
        if self.x < 100:
            raise ValueError(f"x must be >= 100, got {self.x}")
        if not self.variants:
            raise ValueError("variants must be non-empty")
        for v in self.variants:
            if v not in VARIANTS:
                raise ValueError(f"unknown variant {v!r}; expected one of {VARIANTS}")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")
        for d, a in self.progressions:
            if d < 1 or not 1 <= a <= d or math.gcd(a, d) != 1:
                raise ValueError(f"progression ({d}, {a}) must have 1 <= a <= d coprime")
            if "Hplus" in self.variants and (d, a) != (1, 1):
                raise ValueError("Hplus ratios are only available for the full prime set")


@dataclass(frozen=True)
class SurveyRow:
    ell: int
    d: int
    a: int
    x: int
    count_irregular: int
    count_primes: int
    experimental: float  # count_irregular / count_primes, rounded to 6 decimals
    conjectured: float
    lower_bound: float
    variant: str = "G"


def resolve_cache_dir(configured: Path | str | None) -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env).expanduser()
    if configured is not None:
        return Path(configured).expanduser()
    return DEFAULT_CACHE_DIR


class ClassificationCache:
    """File-backed cache: one CSV per concern under the cache directory.

    birregular.csv holds `p,b_irregular,indices` (indices ';'-joined); the
    per-base files orders_<ell>.csv hold `p,ord,ord_sq,jacobi,g,h,hminus,hplus`.
    Flags are recomputed from the stored orders on load, so the two files can
    never drift apart. All writes go through a single writer (the survey main
    thread).
    """

    def __init__(self, root: Path):
        self.root = Path(root)

    def _b_path(self) -> Path:
        return self.root / "birregular.csv"

    def _orders_path(self, ell: int) -> Path:
        return self.root / f"orders_{ell}.csv"

    def load_b_pairs(self) -> dict[int, tuple[int, ...]]:
        path = self._b_path()
        if not path.exists():
            return {}
        out: dict[int, tuple[int, ...]] = {}
        try:
            for line in path.read_text().splitlines():
                if not line or line.startswith("#") or line.startswith("p,"):
                    continue
                p_str, flag, idx = line.split(",")
                indices = tuple(int(t) for t in idx.split(";") if t)
                if bool(int(flag)) != bool(indices):
                    raise ValueError("flag does not match index list")
                out[int(p_str)] = indices
        except (ValueError, IndexError) as exc:
            raise SurveyError(
                f"cache file {path} is corrupt ({exc}); delete it and re-run"
            ) from exc
        return out

    def save_b_pairs(self, pairs: dict[int, tuple[int, ...]]) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        lines = ["p,b_irregular,indices"]
        for p in sorted(pairs):
            idx = pairs[p]
            lines.append(f"{p},{int(bool(idx))},{';'.join(map(str, idx))}")
        self._b_path().write_text("\n".join(lines) + "\n")

    def load_orders(self, ell: int) -> dict[int, tuple[int, int, int]]:
        path = self._orders_path(ell)
        if not path.exists():
            return {}
        out: dict[int, tuple[int, int, int]] = {}
        try:
            for line in path.read_text().splitlines():
                if not line or line.startswith("#") or line.startswith("p,"):
                    continue
                vals = [int(t) for t in line.split(",")]
                if len(vals) != 8:
                    raise ValueError(f"expected 8 fields, got {len(vals)}")
                out[vals[0]] = (vals[1], vals[2], vals[3])
        except ValueError as exc:
            raise SurveyError(
                f"cache file {path} is corrupt ({exc}); delete it and re-run"
            ) from exc
        return out

    def save_classifications(self, ell: int, recs: dict[int, PrimeClassification]) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        lines = ["p,ord,ord_sq,jacobi,g,h,hminus,hplus"]
        for p in sorted(recs):
            r = recs[p]
            lines.append(
                f"{p},{r.ord_ell},{r.ord_ell_sq},{r.jacobi_ell_p},"
                f"{int(r.g_irregular)},{int(r.h_irregular)},"
                f"{int(r.h_minus_irregular)},{int(r.h_plus_irregular)}"
            )
        self._orders_path(ell).write_text("\n".join(lines) + "\n")


def _progress(msg: str, quiet: bool) -> None:
    if not quiet:
        print(msg, file=sys.stderr, flush=True)


def _ensure_b_pairs(
    primes: np.ndarray, cache: ClassificationCache, threads: int, quiet: bool
) -> dict[int, tuple[int, ...]]:
    known = cache.load_b_pairs()
    todo = [int(p) for p in primes if p >= 5 and int(p) not in known]
    if not todo:
        return known
    todo.sort(reverse=True)  # largest first: the quadratic stragglers start early
    start = time.time()
    workers = threads if threads > 0 else (os.cpu_count() or 1)

    def work(p: int) -> tuple[int, tuple[int, ...]]:
        return p, tuple(pair.index for pair in b_irregular_pairs(p))

    fresh: dict[int, tuple[int, ...]] = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for done, (p, idx) in enumerate(pool.map(work, todo), 1):
            fresh[p] = idx
            if done % 500 == 0:
                _progress(
                    f"b-irregularity: {done}/{len(todo)} primes ({time.time() - start:.1f}s)",
                    quiet,
                )
    known.update(fresh)
    cache.save_b_pairs(known)
    _progress(f"b-irregularity: {len(todo)} primes in {time.time() - start:.1f}s", quiet)
    return known


def _rebuild_classification(
    ell: int, p: int, orders: tuple[int, int, int], b: bool
) -> PrimeClassification:
    ordl, ordsq, jac = orders
    if p == ell:
        bb = False if p == 3 else b
        return PrimeClassification(p, ell, 0, 0, 0, bb, p > 3, bb, bb, bb)
    if p == 3:
        return PrimeClassification(p, ell, ordl, ordsq, jac, False, False, False, False, False)
    half = (p - 1) // 2
    g = h = b or ordsq < half
    hm = b or ordl < half
    hp = b or (ordl % 2 == 0 and ordl != p - 1)
    return PrimeClassification(p, ell, ordl, ordsq, jac, b, g, h, hm, hp)


def _ensure_classifications(
    ell: int,
    primes: np.ndarray,
    b_pairs: dict[int, tuple[int, ...]],
    cache: ClassificationCache,
) -> dict[int, PrimeClassification]:
    stored = cache.load_orders(ell)
    recs: dict[int, PrimeClassification] = {}
    fresh = False
    for p in primes:
        p = int(p)
        if p == 2:
            continue
        b = bool(b_pairs.get(p))
        orders = stored.get(p)
        if orders is not None:
            recs[p] = _rebuild_classification(ell, p, orders, b)
        else:
            recs[p] = classify_prime(ell, p, b)
            fresh = True
    if fresh:
        cache.save_classifications(ell, recs)
    return recs


def run_survey(config: SurveyConfig) -> list[SurveyRow]:
    """Classify all primes <= x and build one row per (progression, variant)."""
    primes = sieve_primes(config.x)
    cache = ClassificationCache(resolve_cache_dir(config.cache_dir))
    b_pairs = _ensure_b_pairs(primes, cache, config.threads, config.quiet)
    recs = _ensure_classifications(config.ell, primes, b_pairs, cache)

    rows: list[SurveyRow] = []
    for d, a in config.progressions:
        in_class = primes[primes % d == a % d] if d > 1 else primes
        denominator = int(in_class.size)
        for variant in config.variants:
            flag = _FLAG_FIELD[variant]
            count = sum(
                1 for p in in_class if int(p) in recs and getattr(recs[int(p)], flag)
            )
            kind = variant
            if variant == "G" and (d, a) != (1, 1):
                kind = "G_progression"
            rows.append(
                SurveyRow(
                    ell=config.ell,
                    d=d,
                    a=a,
                    x=config.x,
                    count_irregular=count,
                    count_primes=denominator,
                    experimental=round(count / denominator, 6),
                    conjectured=round(conjectured_ratio(kind, config.ell, d, a), 9),
                    lower_bound=round(lower_bound_ratio(kind, config.ell, d, a), 9),
                    variant=variant,
                )
            )
    return rows


def _format_csv(rows: list[SurveyRow], deterministic: bool) -> str:
    lines = []
    if not deterministic:
        lines.append(f"# generated {time.strftime('%Y-%m-%dT%H:%M:%S%z')}")
    lines.append(CSV_HEADER)
    for r in rows:
        lines.append(
            f"{r.ell},{r.d},{r.a},{r.x},{r.count_irregular},{r.count_primes},"
            f"{r.experimental:.6f},{r.conjectured:.9f},{r.lower_bound:.9f},{r.variant}"
        )
    return "\n".join(lines) + "\n"


def parse_rows_csv(text: str) -> list[SurveyRow]:
    rows = []
    for line in text.splitlines():
        if not line or line.startswith("#") or line.startswith("ell,"):
            continue
        ell, d, a, x, ci, cp, exp, conj, low, variant = line.split(",")
        rows.append(
            SurveyRow(
                ell=int(ell),
                d=int(d),
                a=int(a),
                x=int(x),
                count_irregular=int(ci),
                count_primes=int(cp),
                experimental=float(exp),
                conjectured=float(conj),
                lower_bound=float(low),
                variant=variant,
            )
        )
    return rows


def _format_json(rows: list[SurveyRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"


def _format_text(which: str, rows: list[SurveyRow]) -> str:
    out = []
    if which == "hpm":
        out.append(f"{'ell':>4}  {'H+ exp':>10} {'H+ theo':>10}  {'H- exp':>10} {'H- theo':>10}")
        by_ell: dict[int, dict[str, SurveyRow]] = {}
        for r in rows:
            by_ell.setdefault(r.ell, {})[r.variant] = r
        for ell in sorted(by_ell):
            plus, minus = by_ell[ell]["Hplus"], by_ell[ell]["Hminus"]
            out.append(
                f"{ell:>4}  "
                f"{plus.experimental:>10.6f} {plus.conjectured:>10.6f}  "
                f"{minus.experimental:>10.6f} {minus.conjectured:>10.6f}"
            )
    elif which == "g3":
        out.append(f"{'ell':>4} {'d':>3} {'a':>3}  {'experimental':>12} {'theoretical':>12}")
        for r in rows:
            out.append(
                f"{r.ell:>4} {r.d:>3} {r.a:>3}  {r.experimental:>12.6f} {r.conjectured:>12.6f}"
            )
    else:
        out.append(f"{'ell':>4}  {'experimental':>12} {'theoretical':>12}")
        for r in rows:
            out.append(f"{r.ell:>4}  {r.experimental:>12.6f} {r.conjectured:>12.6f}")
    return "\n".join(out) + "\n"


def emit_table(
    which: str, rows: list[SurveyRow], fmt: str = "text", deterministic: bool = False
) -> str:
    """Render survey rows in the requested format; `which` picks the text layout."""
    if fmt == "csv":
        return _format_csv(rows, deterministic)
    if fmt == "json":
        return _format_json(rows)
    if fmt == "text":
        return _format_text(which, rows)
    raise ValueError(f"unknown format {fmt!r}")


#: ready-made (ell, progressions, variants) sets for the reference tables
TABLE_PRESETS: dict[str, list[tuple[int, tuple[tuple[int, int], ...], tuple[str, ...]]]] = {
    "g1": [(ell, ((1, 1),), ("G",)) for ell in (2, 3, 5, 7, 11, 13, 17, 19)],
    "hpm": [(ell, ((1, 1),), ("Hplus", "Hminus")) for ell in (2, 3, 5, 7, 11, 13, 17, 19)],
    "g3": [
        (3, ((3, 1), (3, 2), (4, 1), (4, 3)), ("G",)),
        (5, ((3, 1), (3, 2), (4, 1), (4, 3)), ("G",)),
        (7, ((3, 1), (3, 2), (4, 1), (4, 3)), ("G",)),
        (
            11,
            tuple((7, a) for a in range(1, 7))
            + tuple((15, a) for a in (1, 2, 4, 7, 8, 11, 13, 14)),
            ("G",),
        ),
    ],
}


def run_table(
    which: str,
    x: int,
    *,
    threads: int = 0,
    cache_dir=None,
    quiet: bool = False,
    deterministic: bool = False,
) -> list[SurveyRow]:
    """Run the surveys backing one of the reference tables."""
    if which not in TABLE_PRESETS:
        raise ValueError(f"unknown table {which!r}; expected one of {sorted(TABLE_PRESETS)}")
    rows: list[SurveyRow] = []
    for ell, progressions, variants in TABLE_PRESETS[which]:
        cfg = SurveyConfig(
            ell=ell,
            x=x,
            progressions=progressions,
            variants=variants,
            threads=threads,
            cache_dir=cache_dir,
            quiet=quiet,
            deterministic=deterministic,
        )
        rows.extend(run_survey(cfg))
    return rows
