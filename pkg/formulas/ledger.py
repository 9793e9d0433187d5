"""
The verification ledger: every closed form is evaluated at an instance and compared with values computed on a
group built for that instance. Oracle values are the ground truth; a disagreement is recorded with both sides.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from django.conf import settings

from algebra.exceptions import AlgebraError
from commuting.centralizers import block_count
from formulas.closed_forms import ClosedFormValue, closed_form, corrected_value, get_closed_form
from formulas.enums import Classification, Oracle, Quantity, Verdict
from formulas.exceptions import FormulaError
from groups.specs import group_from_spec
from groups.structure import is_ac_group
from groups.tables import GroupTable
from partitions.bounds import lower_bound_blocks
from treecount.engines import run_engine
from treecount.enums import KappaMethod
from treecount.exceptions import TreeCountError
from treecount.factors import factor_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LedgerInstance:
    formula: str
    params: dict
    group: dict
    engines: tuple = ()

    @property
    def sort_key(self) -> tuple:
        return self.formula, tuple(sorted(self.params.items())), repr(self.group)


@dataclass(frozen=True)
class OracleValue:
    engine: str
    value: int
    factors: Optional[tuple] = None


@dataclass(frozen=True)
class LedgerEntry:
    formula: str
    params: dict
    group: str
    closed_form: Optional[ClosedFormValue]
    oracles: tuple
    verdict: str
    classification: str
    ms: float
    notes: tuple = ()


def default_engines(G: GroupTable) -> list[str]:
    engines = []
    if not G.is_abelian and is_ac_group(G):
        engines.extend([KappaMethod.AC_STRUCTURE, KappaMethod.SPECTRUM])
    if G.order <= settings.MATRIX_TREE_EXACT_CAP:
        engines.append(KappaMethod.MATRIX_TREE)
    return engines


def _kappa_oracles(G: GroupTable, engines: Iterable[str], notes: list) -> list[OracleValue]:
    oracles = []
    for engine in engines:
        try:
            result = run_engine(G, engine)
        except TreeCountError as e:
            notes.append(f'{engine}: {e}')
            continue
        oracles.append(OracleValue(engine=str(result.method), value=result.value, factors=result.factors))
    return oracles


def compute_oracles(instance: LedgerInstance, G: GroupTable, notes: list) -> list[OracleValue]:
    quantity = get_closed_form(instance.formula).quantity
    if quantity == Quantity.BLOCKS:
        return [OracleValue(engine=Oracle.CENTRALIZER_COUNT, value=block_count(G))]
    if quantity == Quantity.BOUND:
        return [OracleValue(engine=Oracle.CLASS_COUNT, value=lower_bound_blocks(G))]
    return _kappa_oracles(G, instance.engines or default_engines(G), notes)


def classify(formula: str, params: dict, verdict: str, oracles: Iterable[OracleValue] = ()) -> str:
    """A mismatch is expected only when the formula is a known misprint and every oracle gives its corrected value."""
    if verdict == Verdict.MATCH:
        return Classification.OK
    if verdict == Verdict.ORACLE_UNAVAILABLE:
        return Classification.UNVERIFIED
    if verdict == Verdict.MISMATCH:
        expected = corrected_value(formula, params)
        if expected is not None and all(oracle.value == expected for oracle in oracles):
            return Classification.EXPECTED_MISMATCH
    return Classification.UNEXPECTED_MISMATCH


def _with_factors(oracle: OracleValue) -> OracleValue:
    if oracle.factors is not None or oracle.value == 0:
        return oracle
    return OracleValue(engine=oracle.engine, value=oracle.value, factors=factor_product([(oracle.value, 1)]))


def verify_instance(instance: LedgerInstance) -> LedgerEntry:
    started = time.perf_counter()
    notes = []
    group_name = ''
    value = None
    oracles = []
    try:
        value = closed_form(instance.formula, instance.params)
        G = group_from_spec(instance.group)
        group_name = G.name
        oracles = compute_oracles(instance, G, notes)
    except (FormulaError, AlgebraError) as e:
        logger.error(f'{instance.formula} {instance.params}: {e}')
        notes.append(str(e))
        verdict = Verdict.ERROR
    else:
        if not oracles:
            verdict = Verdict.ORACLE_UNAVAILABLE
        elif all(oracle.value == value.value for oracle in oracles):
            verdict = Verdict.MATCH
        else:
            verdict = Verdict.MISMATCH
            oracles = [_with_factors(oracle) for oracle in oracles]

    classification = classify(instance.formula, instance.params, verdict, oracles)
    ms = round((time.perf_counter() - started) * 1000, 1)
    if classification == Classification.UNEXPECTED_MISMATCH:
        logger.warning(f'{instance.formula} {instance.params} on {group_name}: {verdict}')
    else:
        logger.info(f'{instance.formula} {instance.params} on {group_name}: {verdict} ({classification}) in {ms} ms')
    return LedgerEntry(
        formula=instance.formula,
        params=dict(instance.params),
        group=group_name,
        closed_form=value,
        oracles=tuple(oracles),
        verdict=verdict,
        classification=classification,
        ms=ms,
        notes=tuple(notes),
    )


def verify_ledger(scope: Iterable[LedgerInstance], workers: int = None) -> list[LedgerEntry]:
    """Entries in (formula, params) order whatever the evaluation order."""
    instances = sorted(scope, key=lambda instance: instance.sort_key)
    workers = workers or settings.LEDGER_WORKERS
    logger.info(f'Verifying {len(instances)} ledger instances with {workers} worker(s)')
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(verify_instance, instances))
    return [verify_instance(instance) for instance in instances]


def has_unexpected_mismatch(entries: Iterable[LedgerEntry]) -> bool:
    return any(entry.classification == Classification.UNEXPECTED_MISMATCH for entry in entries)
