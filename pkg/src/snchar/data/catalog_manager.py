import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from loguru import logger

from snchar.closedform import certification_window, derive
from snchar.data.models import CATALOG_KIND, OUTPUT_FORMAT, CatalogEntry
from snchar.errors import CatalogWriteError, DomainError
from snchar.partitions import Partition, mu0_catalog
from snchar.rational import RationalFunction
from snchar.utils import to_range_string

DESK_SCALE_MAX_WEIGHT = 8
FULL_SCALE_MAX_WEIGHT = 14


def build_entry(kind: CATALOG_KIND, mu0: Partition) -> CatalogEntry:
    """Derive and certify one closed form; raises ``CertificationError`` on mismatch"""
    cf = derive(kind, mu0)
    return CatalogEntry(
        kind=kind,
        mu0=list(mu0.parts),
        formula=cf.to_record(),
        certified_range=certification_window(cf, mu0),
    )


def _build_entry_star(args: tuple[CATALOG_KIND, Partition]) -> CatalogEntry:
    return build_entry(*args)


def format_entry(entry: CatalogEntry) -> str:
    """``psi2 | mu0=(2) | R(n) = ... | base=C(2n,n) | valid_from=2 | checked=2..20``"""
    factor = RationalFunction(num=tuple(entry.formula.num), den=tuple(entry.formula.den))
    parts = ",".join(str(p) for p in entry.mu0)
    return (
        f"{entry.kind} | mu0=({parts}) | R(n) = {factor.to_text()} | "
        f"base={entry.formula.base} | valid_from={entry.formula.valid_from} | "
        f"checked={to_range_string(*entry.certified_range)}"
    )


class CatalogManager:
    """
    Out path schema:

    root_dir / kind / mu0_le_<max_weight>.<txt|json>
    """

    def __init__(
        self,
        root_dir: str | Path = "./catalogs",
        kind: CATALOG_KIND = CATALOG_KIND.PHI2,
        format: OUTPUT_FORMAT = OUTPUT_FORMAT.TEXT,
        workers: int = 1,
    ):
        self.root_dir = Path(root_dir)
        self.kind = CATALOG_KIND(kind)
        self.format = OUTPUT_FORMAT(format)
        self.workers = workers
        self.logger = logger.bind(kind=str(self.kind))

    @staticmethod
    def default_file_name(kind: str, max_weight: int, format: str) -> str:
        extension = "json" if format == OUTPUT_FORMAT.JSON else "txt"
        return f"{kind}/mu0_le_{max_weight}.{extension}"

    def get_path(self, max_weight: int) -> Path:
        return self.root_dir / self.default_file_name(
            self.kind, max_weight, self.format
        )

    def build(self, max_weight: int) -> list[CatalogEntry]:
        """One certified entry per mu0 (parts >= 2, weight <= max_weight), in catalog order"""
        if max_weight < 0:
            raise DomainError(f"max_weight must be >= 0, got {max_weight}")
        if max_weight > DESK_SCALE_MAX_WEIGHT:
            self.logger.warning(
                f"max_weight={max_weight} is above the desk-scale default "
                f"{DESK_SCALE_MAX_WEIGHT}; expect a long run"
            )

        jobs = [(self.kind, mu0) for mu0 in mu0_catalog(max_weight)]
        self.logger.debug(f"{len(jobs)} cases, {self.workers} worker(s)")
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                # map keeps submission order
                return list(pool.map(_build_entry_star, jobs))
        return [build_entry(kind, mu0) for kind, mu0 in jobs]

    def render(self, entries: list[CatalogEntry]) -> str:
        if self.format == OUTPUT_FORMAT.JSON:
            payload = [entry.model_dump(mode="json") for entry in entries]
            return json.dumps(payload, indent=2) + "\n"
        return "".join(format_entry(entry) + "\n" for entry in entries)

    def write(self, max_weight: int, out: str | Path | None = None) -> Path:
        path = Path(out) if out is not None else self.get_path(max_weight)
        text = self.render(self.build(max_weight))
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise CatalogWriteError(f"cannot write catalog to {path}: {e}") from e
        self.logger.info(f"wrote catalog to {path}")
        return path
