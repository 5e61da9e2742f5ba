import logging
from typing import Optional

from app.errors import OrthologicError
from app.models.bridges import kalmbach, macneille_embedding, verify_kalmbach_isomorphism
from app.models.ortho_lattice import is_orthomodular, validate_ortholattice
from app.models.ortho_space import OrthoSpace, serialize_space
from app.models.poset import Poset, macneille, serialize_poset
from app.models.quotient_space import QuotientSpace, quotient_space
from app.schemas.lattice import (
    CompletionDump,
    CompletionIdeal,
    IsomorphismRow,
    KalmbachDump,
    KalmbachElement,
    LogicDump,
    LogicElement,
)

logger = logging.getLogger(__name__)


class LatticeController:
    """
    Controller for dumping the logic, the Kalmbach lattice and the completion
    """

    def _logic_dump(self, subject: str, space: OrthoSpace, qs: Optional[QuotientSpace] = None) -> LogicDump:
        logic = space.logic
        elements = []
        for i, members in enumerate(logic.closed_sets):
            maximal = None
            if qs is not None and qs.is_lower_set(members) and qs.is_chain_type(members):
                maximal = qs.labels_of(qs.maximal(members))
            elements.append(LogicElement(
                index=i,
                members=space.labels_of(members),
                maximal=maximal,
                ocompl=logic.ocompl[i],
            ))
        return LogicDump(
            subject=subject,
            points=list(space.points),
            size=logic.size,
            elements=elements,
            covers=logic.covers(),
            orthomodular=bool(is_orthomodular(logic)),
            dacey=bool(space.dacey_space()),
        )

    def logic_of_poset(self, poset: Poset) -> LogicDump:
        """
        Dump the logic of Q(P)

        Args:
            poset: The poset whose quotient space is closed up

        Returns:
            Orthoclosed sets with their order and orthocomplement

        Raises:
            OrthologicError: If the logic cannot be built
        """
        try:
            qs = quotient_space(poset)
            return self._logic_dump(serialize_poset(poset), qs.ortho, qs)
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to build logic: {str(e)}")

    def logic_of_space(self, space: OrthoSpace) -> LogicDump:
        """
        Dump the logic of a standalone orthogonality space

        Raises:
            OrthologicError: If the logic cannot be built
        """
        try:
            return self._logic_dump(serialize_space(space), space)
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to build logic: {str(e)}")

    def kalmbach(self, poset: Poset) -> KalmbachDump:
        """
        Dump K(P) and, for lattices, its correspondence with the logic of Q(P)

        Args:
            poset: A bounded poset

        Returns:
            Even chains with order and orthocomplement, axiom verdicts and the f table

        Raises:
            UnboundedPosetError: If the poset lacks a bound
            OrthologicError: If the construction fails
        """
        try:
            lattice = kalmbach(poset)
            dump = KalmbachDump(
                poset=serialize_poset(poset),
                size=lattice.size,
                elements=[
                    KalmbachElement(index=i, chain=chain.labels(), ocompl=lattice.ocompl[i])
                    for i, chain in enumerate(lattice.chains)
                ],
                covers=lattice.covers(),
                ortholattice=validate_ortholattice(lattice).passed,
                orthomodular=bool(is_orthomodular(lattice)),
            )
            if poset.is_lattice():
                isomorphism = verify_kalmbach_isomorphism(poset, lattice=lattice)
                logic = isomorphism.space.logic
                dump.isomorphism = [
                    IsomorphismRow(
                        chain=lattice.chains[i].labels(),
                        closed_set=isomorphism.space.labels_of(logic.closed_sets[x]),
                    )
                    for i, x in isomorphism.table
                ]
                dump.isomorphism_holds = isomorphism.check.holds
                dump.failed_law = isomorphism.check.law
            return dump
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to build Kalmbach lattice: {str(e)}")

    def macneille(self, poset: Poset) -> CompletionDump:
        """
        Dump the Dedekind-MacNeille completion and, when bounded, its image in the logic

        Args:
            poset: The poset to complete

        Returns:
            Closed ideals with order, principal generators and τ images

        Raises:
            OrthologicError: If the completion fails
        """
        try:
            completion = macneille(poset)
            principal = {completion.eta(x): poset.elements[x] for x in range(poset.n)}
            embedding = macneille_embedding(poset) if poset.is_bounded() else None
            ideals = [
                CompletionIdeal(
                    index=i,
                    members=ideal.labels(),
                    principal=principal.get(i),
                    image=None if embedding is None else embedding.space.labels_of(embedding(i)),
                )
                for i, ideal in enumerate(completion.closed_ideals)
            ]
            dump = CompletionDump(
                poset=serialize_poset(poset),
                size=completion.size,
                ideals=ideals,
                covers=completion.covers(),
                surjective=completion.is_surjective(),
            )
            if embedding is not None:
                check = embedding.verify()
                dump.logic_size = embedding.space.logic.size
                dump.embedding_holds = check.holds
                dump.failed_law = check.law
            return dump
        except OrthologicError:
            raise
        except Exception as e:
            raise OrthologicError(f"Failed to build completion: {str(e)}")
