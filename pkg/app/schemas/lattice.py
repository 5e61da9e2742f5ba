from pydantic import BaseModel, Field
from typing import List, Optional, Tuple

class LogicElement(BaseModel):
    index: int = Field(..., description="Position in the element order (size, then members)")
    members: List[str] = Field(..., description="Points of the orthoclosed set")
    maximal: Optional[List[str]] = Field(None, description="Maximal quotients when the set is of chain type")
    ocompl: int = Field(..., description="Index of the orthocomplement")

class LogicDump(BaseModel):
    subject: str = Field(..., description="The poset or space in text form")
    points: List[str] = Field(..., description="Points of the orthogonality space")
    size: int = Field(..., description="Number of orthoclosed sets")
    elements: List[LogicElement] = Field(..., description="Orthoclosed sets, bottom first")
    covers: List[Tuple[int, int]] = Field(..., description="Hasse diagram edges (lower, upper)")
    orthomodular: bool = Field(..., description="Whether the logic is orthomodular")
    dacey: bool = Field(..., description="Whether the space is Dacey")

class KalmbachElement(BaseModel):
    index: int = Field(..., description="Position in the element order (length, then members)")
    chain: List[str] = Field(..., description="Even chain, ascending")
    ocompl: int = Field(..., description="Index of C △ {0, 1}")

class IsomorphismRow(BaseModel):
    chain: List[str] = Field(..., description="Even chain C")
    closed_set: List[str] = Field(..., description="f(C), the union of the block down-sets")

class KalmbachDump(BaseModel):
    poset: str = Field(..., description="The poset in text form")
    size: int = Field(..., description="Number of even chains")
    elements: List[KalmbachElement] = Field(..., description="Even chains, empty chain first")
    covers: List[Tuple[int, int]] = Field(..., description="Hasse diagram edges (lower, upper)")
    ortholattice: bool = Field(..., description="Whether K(P) satisfies the ortholattice axioms")
    orthomodular: bool = Field(..., description="Whether K(P) is orthomodular")
    isomorphism: Optional[List[IsomorphismRow]] = Field(None, description="f table, for lattices")
    isomorphism_holds: Optional[bool] = Field(None, description="Whether f and g are inverse ortho-isomorphisms")
    failed_law: Optional[str] = Field(None, description="First law the isomorphism breaks")

class CompletionIdeal(BaseModel):
    index: int = Field(..., description="Position in the ideal order (size, then members)")
    members: List[str] = Field(..., description="Elements of the closed ideal")
    principal: Optional[str] = Field(None, description="x when the ideal is x↓")
    image: Optional[List[str]] = Field(None, description="τ(I) inside the logic, for bounded posets")

class CompletionDump(BaseModel):
    poset: str = Field(..., description="The poset in text form")
    size: int = Field(..., description="Number of closed ideals")
    ideals: List[CompletionIdeal] = Field(..., description="Closed ideals, smallest first")
    covers: List[Tuple[int, int]] = Field(..., description="Hasse diagram edges (lower, upper)")
    surjective: bool = Field(..., description="Whether every closed ideal is principal")
    logic_size: Optional[int] = Field(None, description="Size of the logic the ideals embed into")
    embedding_holds: Optional[bool] = Field(None, description="Whether τ is an injective complete-lattice morphism")
    failed_law: Optional[str] = Field(None, description="First law the embedding breaks")
