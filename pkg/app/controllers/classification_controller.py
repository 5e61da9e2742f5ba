import logging
from typing import List, Optional, Tuple

from app.errors import OrthologicError
from app.models.ortho_lattice import OrthoLattice, find_hexagon
from app.models.ortho_space import DaceyVerdict, OrthoSpace, serialize_space
from app.models.poset import Poset, nonlattice_witness, serialize_poset
from app.models.quotient_space import QuotientSpace, classify, quotient_space, short_basis_witness
from app.schemas.classification import ClassificationReport, NonDaceyWitness, Witnesses, WitnessReport

logger = logging.getLogger(__name__)


def _element_labels(lattice: OrthoLattice, witness: Optional[Tuple[int, ...]]) -> Optional[List[str]]:
    if witness is None:
        return None
    return [lattice.labels[x] for x in witness]


def _non_dacey(space: OrthoSpace, verdict: DaceyVerdict) -> Optional[NonDaceyWitness]:
    if verdict.holds or verdict.closed_set is None:
        return None
    return NonDaceyWitness(
        closed_set=space.labels_of(verdict.closed_set),
        basis=space.labels_of(verdict.basis),
    )


def _short_basis(qs: QuotientSpace, pair: Optional[Tuple[int, int]]) -> Optional[NonDaceyWitness]:
    if pair is None:
        return None
    closed, basis = pair
    return NonDaceyWitness(closed_set=qs.labels_of(closed), basis=qs.labels_of(basis))


class ClassificationController:
    """
    Controller for classifying posets and extracting failure witnesses
    """

    def classify(self, poset: Poset) -> ClassificationReport:
        """
        Classify a poset by lattice, chain-type, Dacey and orthomodular verdicts

        Args:
            poset: The poset to classify

        Returns:
            Every verdict with a witness for each one that fails

        Raises:
            OrthologicError: If the classification fails
        """
        try:
            result = classify(poset)
            qs, logic = result.space, result.logic
            names = poset.elements

            def pair(found: Optional[Tuple[int, int]]) -> Optional[List[str]]:
                return None if found is None else [names[x] for x in found]

            witnesses = Witnesses(
                missing_bound=pair(result.missing_bound),
                incomparable=pair(result.incomparable),
                nonlattice_ideal=None if result.nonlattice_ideal is None else result.nonlattice_ideal.labels(),
                non_chain_type=None if result.non_chain_type is None else qs.labels_of(result.non_chain_type),
                non_dacey=_non_dacey(qs.ortho, result.dacey),
                short_basis=_short_basis(qs, result.short_basis),
                orthomodular_failure=_element_labels(logic, result.orthomodular.witness),
                boolean_failure=_element_labels(logic, result.boolean.witness),
                hexagon=_element_labels(logic, result.hexagon),
                disjoint_pair=None if result.disjoint_pair is None else [
                    qs.labels_of(mask) for mask in result.disjoint_pair
                ],
            )
            return ClassificationReport(
                poset=serialize_poset(poset),
                bounded=result.bounded,
                lattice=result.lattice,
                chain=result.chain,
                chain_type=result.chain_type,
                dacey=bool(result.dacey),
                orthomodular=bool(result.orthomodular),
                boolean=bool(result.boolean),
                theorems_apply=result.bounded,
                witnesses=witnesses,
                logic_size=result.logic_size,
                q_size=result.q_size,
            )
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to classify poset: {str(e)}")

    def witness_poset(self, poset: Poset) -> WitnessReport:
        """
        Collect only the failure witnesses of Q(P)

        Args:
            poset: The poset whose quotient space is inspected

        Returns:
            Non-Dacey set and basis, τ(I) short basis, hexagon and non-lattice ideal

        Raises:
            OrthologicError: If the search fails
        """
        try:
            qs = quotient_space(poset)
            logic = qs.logic
            ideal = nonlattice_witness(poset)
            short = None
            if ideal is not None and poset.is_bounded():
                short = _short_basis(qs, short_basis_witness(qs, ideal))
            report = WitnessReport(
                subject=serialize_poset(poset),
                non_dacey=_non_dacey(qs.ortho, qs.ortho.dacey_space()),
                short_basis=short,
                hexagon=_element_labels(logic, find_hexagon(logic)),
                nonlattice_ideal=None if ideal is None else ideal.labels(),
                found=False,
            )
            report.found = any(
                value is not None
                for value in (report.non_dacey, report.short_basis, report.hexagon, report.nonlattice_ideal)
            )
            return report
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to find witnesses: {str(e)}")

    def witness_space(self, space: OrthoSpace) -> WitnessReport:
        """
        Collect the non-Dacey set and hexagon of a standalone orthogonality space

        Args:
            space: The orthogonality space

        Returns:
            Witness report; ideal and short basis are always absent

        Raises:
            OrthologicError: If the search fails
        """
        try:
            non_dacey = _non_dacey(space, space.dacey_space())
            hexagon = _element_labels(space.logic, find_hexagon(space.logic))
            return WitnessReport(
                subject=serialize_space(space),
                non_dacey=non_dacey,
                hexagon=hexagon,
                found=non_dacey is not None or hexagon is not None,
            )
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to find witnesses: {str(e)}")
