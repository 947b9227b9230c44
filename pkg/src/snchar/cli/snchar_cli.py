import functools
import json
import sys

import fire
from loguru import logger
from pydantic import ValidationError

from snchar.characters import character_ct, character_table
from snchar.charsums import phi2, power_sum, psi2, remarkable_identity_holds
from snchar.closedform import derive, eval_closed_form
from snchar.config import load_settings
from snchar.data.catalog_manager import (
    FULL_SCALE_MAX_WEIGHT,
    DESK_SCALE_MAX_WEIGHT,
    CatalogManager,
    build_entry,
)
from snchar.data.models import (
    CATALOG_KIND,
    ENGINE,
    OUTPUT_FORMAT,
    SUM_FAMILY,
    SumRequest,
)
from snchar.errors import (
    CertificationError,
    EngineMismatchError,
    RecurrenceInconsistencyError,
    SingularPointError,
    SnCharError,
)
from snchar.oracle import mn_character
from snchar.partitions import Partition, f_lambda, parse_partition
from snchar.recurrence import guess_recurrence, holdout_report
from snchar.utils import index_range, parse_index_range

EXIT_INPUT = 2
EXIT_CERTIFICATION = 3
EXIT_GUESS = 4
EXIT_INCONSISTENT = 5


class GuessFailed(SnCharError):
    """No recurrence within the requested bounds"""


def _exit_code(error: Exception) -> int:
    if isinstance(error, CertificationError):
        return EXIT_CERTIFICATION
    if isinstance(error, GuessFailed):
        return EXIT_GUESS
    if isinstance(
        error,
        (EngineMismatchError, SingularPointError, RecurrenceInconsistencyError),
    ):
        return EXIT_INCONSISTENT
    return EXIT_INPUT


def _guarded(command):
    """Map snchar and validation errors to exit codes, message on stderr"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (SnCharError, ValidationError, ValueError) as e:
            print(f"error: {e}", file=sys.stderr)
            sys.exit(_exit_code(e))

    return wrapper


def _as_partition(value) -> Partition:
    """fire turns ``3,2`` into a tuple and ``4`` into an int; accept every form"""
    if value is None:
        return Partition()
    if isinstance(value, bool):
        raise ValueError(f"invalid partition {value!r}")
    if isinstance(value, int):
        return parse_partition(str(value))
    if isinstance(value, (tuple, list)):
        return parse_partition(",".join(str(v) for v in value))
    return parse_partition(str(value))


def _indices(value) -> list[int]:
    lo, hi = parse_index_range(value)
    return index_range(lo, hi)


def _emit_values(rows: list[tuple[int, int]], format: str, **meta) -> None:
    if OUTPUT_FORMAT(format) == OUTPUT_FORMAT.JSON:
        print(json.dumps({**meta, "values": [{"n": n, "value": v} for n, v in rows]}))
        return
    for n, v in rows:
        print(f"{n}\t{v}")


class SnCharCLI:
    """Exact symmetric-group characters and character sums

    Examples:
    ---------
    snchar char --lam=3,1 --mu=1,1,1,1 --engine=both
    snchar sum --family=rows_bounded --r=2 --s=2 --n=1..6
    snchar closedform --kind=psi2 --mu0=3,2
    snchar catalog --kind=phi2 --max-weight=6 --format=json
    snchar guess --r=3 --s=2 --n-terms=40
    """

    def __init__(self):
        self.settings = load_settings()

    @_guarded
    def char(self, lam, mu, engine: str = "ct"):
        """
        Character value chi^lam(mu)

        Args:
            lam: shape, e.g. 3,1
            mu: cycle type, e.g. 1,1,1,1 or "2^2"
            engine: ct (constant term), mn (Murnaghan-Nakayama) or both
        """
        lam, mu, engine = _as_partition(lam), _as_partition(mu), ENGINE(engine)
        if engine == ENGINE.CT:
            print(character_ct(lam, mu))
        elif engine == ENGINE.MN:
            print(mn_character(lam, mu))
        else:
            ct, mn = character_ct(lam, mu), mn_character(lam, mu)
            if ct != mn:
                raise EngineMismatchError(
                    f"chi^({lam})({mu}): constant term gives {ct}, "
                    f"Murnaghan-Nakayama gives {mn}"
                )
            print(f"ct={ct} mn={mn}")

    @_guarded
    def f(self, lam):
        """Number of standard Young tableaux of shape lam"""
        print(f_lambda(_as_partition(lam)))

    @_guarded
    def sum(
        self,
        family: str,
        n,
        mu0=None,
        r: int | None = None,
        k: int | None = None,
        l: int | None = None,
        s: int | None = None,
        power: int | None = None,
        format: str = "text",
    ):
        """
        Restricted sum of character powers, one line per n

        Args:
            family: rows_bounded, hook, two_row, meta_hook or all_shapes
            n: a single n or a range lo..hi
            mu0: non-trivial cycles (parts >= 2), padded with ones
            r: row bound (rows_bounded)
            k, l: meta-hook cell (meta_hook)
            s, power: exponent (synonyms, default 2)
        """
        if s is not None and power is not None and s != power:
            raise ValueError(f"--s={s} and --power={power} disagree")
        exponent = s if s is not None else (power if power is not None else 2)
        mu0 = _as_partition(mu0)
        family = SUM_FAMILY(family)
        rows = []
        for n_value in _indices(n):
            req = SumRequest(
                family=family, s=exponent, mu0=mu0, n=n_value, r=r, k=k, l=l
            )
            rows.append((n_value, power_sum(req)))
        _emit_values(rows, format, family=str(family), s=exponent, mu0=list(mu0.parts))

    @_guarded
    def phi2(self, n, mu0=None, format: str = "text"):
        """Sum of squared hook characters at mu0 1^(n-|mu0|)"""
        mu0 = _as_partition(mu0)
        rows = [(n_value, phi2(mu0, n_value)) for n_value in _indices(n)]
        _emit_values(rows, format, kind="phi2", mu0=list(mu0.parts))

    @_guarded
    def psi2(self, n, mu0=None, format: str = "text"):
        """Sum of squared two-row characters at mu0 1^(n-|mu0|)"""
        mu0 = _as_partition(mu0)
        rows = [(n_value, psi2(mu0, n_value)) for n_value in _indices(n)]
        _emit_values(rows, format, kind="psi2", mu0=list(mu0.parts))

    @_guarded
    def closedform(
        self, kind: str, mu0=None, format: str = "text", pretty: bool = False
    ):
        """
        Certified closed form R(n) * base for phi2 or psi2

        Args:
            kind: phi2 or psi2
            mu0: non-trivial cycles (parts >= 2)
            pretty: also print the factored denominator form
        """
        kind, mu0 = CATALOG_KIND(kind), _as_partition(mu0)
        if OUTPUT_FORMAT(format) == OUTPUT_FORMAT.JSON:
            print(build_entry(kind, mu0).model_dump_json())
            return
        cf = derive(kind, mu0)
        print(cf.serialize())
        if pretty:
            print(cf.pretty())

    @_guarded
    def catalog(
        self,
        kind: str,
        max_weight: int | None = None,
        out: str | None = None,
        format: str = "text",
        full_scale: bool = False,
        workers: int | None = None,
    ):
        """
        Write one certified closed form per mu0 with |mu0| <= max_weight

        Args:
            kind: phi2 or psi2
            max_weight: bound on |mu0| (default 8)
            out: output file (default <catalog_dir>/<kind>/mu0_le_<W>.<ext>)
            full_scale: use max_weight 14
            workers: processes (default SNCHAR_WORKERS)
        """
        if max_weight is None:
            max_weight = (
                FULL_SCALE_MAX_WEIGHT if full_scale else DESK_SCALE_MAX_WEIGHT
            )
        manager = CatalogManager(
            root_dir=self.settings.catalog_dir,
            kind=CATALOG_KIND(kind),
            format=OUTPUT_FORMAT(format),
            workers=workers or self.settings.workers,
        )
        print(manager.write(max_weight, out))

    @_guarded
    def guess(
        self,
        family: str = "rows_bounded",
        r: int | None = 3,
        s: int = 2,
        mu0=None,
        n_terms: int = 40,
        max_order: int | None = None,
        max_degree: int | None = None,
        format: str = "text",
    ):
        """
        Guess a P-recurrence for a restricted sum from its first n_terms values

        Args:
            family: sum family (default rows_bounded)
            r: row bound for rows_bounded
            s: exponent
            mu0: non-trivial cycles (parts >= 2)
            n_terms: number of consecutive values, starting at n = |mu0| (n >= 1 for hook)
        """
        mu0, family = _as_partition(mu0), SUM_FAMILY(family)
        start = max(mu0.weight, 1) if family == SUM_FAMILY.HOOK else mu0.weight
        max_order = max_order or self.settings.max_order
        max_degree = max_degree or self.settings.max_degree
        terms = [
            (
                n_value,
                power_sum(
                    SumRequest(
                        family=family,
                        s=s,
                        mu0=mu0,
                        n=n_value,
                        r=r if family == SUM_FAMILY.ROWS_BOUNDED else None,
                    )
                ),
            )
            for n_value in range(start, start + n_terms)
        ]
        rec = guess_recurrence(terms, max_order=max_order, max_degree=max_degree)
        if rec is None:
            raise GuessFailed(
                f"no recurrence with order <= {max_order} and degree <= {max_degree}"
            )
        report = holdout_report(rec, terms)
        if OUTPUT_FORMAT(format) == OUTPUT_FORMAT.JSON:
            print(json.dumps({**rec.to_json_dict(), "report": report}))
            return
        print(rec.to_text())
        print(report)

    @_guarded
    def table(self, n: int):
        """Character table of S_n, rows are shapes and columns cycle types"""
        table = character_table(int(n))
        print("\t".join(["lam\\mu"] + [f"({mu})" for mu in table.partitions]))
        for lam, row in zip(table.partitions, table.values):
            print("\t".join([f"({lam})"] + [str(v) for v in row]))

    @_guarded
    def identity(self, n="5..30"):
        """
        Check 2*psi2((3), n) == phi2((3,2), n+2) by summation and by the closed forms
        """
        psi_cf = derive(CATALOG_KIND.PSI2, Partition(parts=(3,)))
        phi_cf = derive(CATALOG_KIND.PHI2, Partition(parts=(3, 2)))
        failed = []
        for n_value in _indices(n):
            by_sum = remarkable_identity_holds(n_value)
            by_form = 2 * eval_closed_form(psi_cf, n_value) == eval_closed_form(
                phi_cf, n_value + 2
            )
            print(f"{n_value}\tsummation={by_sum}\tclosed_form={by_form}")
            if not (by_sum and by_form):
                failed.append(n_value)
        if failed:
            print(f"identity fails at n={failed}", file=sys.stderr)
            sys.exit(EXIT_INCONSISTENT)


def main():
    try:
        settings = load_settings()
    except SnCharError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level)
    fire.Fire(SnCharCLI)


if __name__ == "__main__":
    main()
