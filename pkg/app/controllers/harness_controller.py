import logging
from typing import Optional

from app.errors import OrthologicError
from app.models.harness import HarnessConfig, theorem_harness
from app.schemas.harness import (
    DiscrepancyEntry,
    HarnessReport,
    ObservationCount,
    PosetSummary,
    TheoremSummary,
    UnboundedNote,
)

logger = logging.getLogger(__name__)


class HarnessController:
    """
    Controller for running the theorem harness
    """

    def run(
        self,
        n_max: int,
        config: HarnessConfig,
        workers: Optional[int] = None,
        graph_max: Optional[int] = None,
        allow_large: bool = False,
    ) -> HarnessReport:
        """
        Check every theorem over the bounded catalogue and the graph catalogue

        Args:
            n_max: Largest poset size
            config: Sampling, seed and negative-control settings
            workers: Worker processes
            graph_max: Largest graph size
            allow_large: Accept sizes up to the hard cap

        Returns:
            Tallies, discrepancies and per-poset verdicts

        Raises:
            CapExceededError: If ``n_max`` is out of range
            OrthologicError: If the run fails
        """
        try:
            result = theorem_harness(n_max, config, workers, graph_max, allow_large)
            return HarnessReport(
                n_max=result.n_max,
                catalogue_size=result.catalogue_size,
                graph_count=result.graph_count,
                mutation=result.mutation,
                verified=result.ok,
                theorems=[
                    TheoremSummary(
                        theorem=theorem,
                        total=tally.total,
                        passed=tally.passed,
                        failed=tally.failed,
                        vacuous=tally.vacuous,
                    )
                    for theorem, tally in result.tallies.items()
                ],
                discrepancies=[
                    DiscrepancyEntry(theorem=d.theorem, subject=d.subject, detail=d.detail)
                    for d in result.discrepancies
                ],
                coverage=result.coverage,
                observations={
                    name: ObservationCount(holds=holds, total=total)
                    for name, (holds, total) in sorted(result.observations.items())
                },
                unbounded=UnboundedNote(**result.unbounded),
                posets=[
                    PosetSummary(
                        poset=outcome.text,
                        verdicts=outcome.verdicts,
                        logic_size=outcome.logic_size,
                        q_size=outcome.q_size,
                    )
                    for outcome in result.outcomes
                ],
            )
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to run harness: {str(e)}")
