from pydantic import BaseModel, Field
from typing import Dict, List, Optional

class TheoremSummary(BaseModel):
    theorem: str = Field(..., description="Theorem or lemma key")
    total: int = Field(..., description="Instances checked")
    passed: int = Field(..., description="Instances that held, vacuous ones included")
    failed: int = Field(..., description="Instances that broke")
    vacuous: int = Field(..., description="Instances whose hypotheses did not apply")

class DiscrepancyEntry(BaseModel):
    theorem: str = Field(..., description="Theorem or lemma key")
    subject: str = Field(..., description="Poset or space in text form, for replay")
    detail: str = Field(..., description="What broke")

class PosetSummary(BaseModel):
    poset: str = Field(..., description="The poset in text form")
    verdicts: Dict[str, bool] = Field(..., description="Independent verdicts of the classification")
    logic_size: int = Field(..., description="Number of orthoclosed subsets of Q(P)")
    q_size: int = Field(..., description="Number of proper quotients")

class ObservationCount(BaseModel):
    holds: int = Field(..., description="Posets on which the observation held")
    total: int = Field(..., description="Posets on which it was recorded")

class UnboundedNote(BaseModel):
    poset: str = Field(..., description="The two-element antichain")
    q_size: int = Field(..., description="Number of proper quotients")
    logic_size: int = Field(..., description="Size of its logic")
    chain: bool = Field(..., description="Whether it is a chain")
    boolean: bool = Field(..., description="Whether its logic is Boolean")
    stated_logic_size: int = Field(..., description="Logic size usually quoted for this example: the two-element algebra")
    differs_from_stated: bool = Field(..., description="Whether the computed logic size departs from the quoted one")

class HarnessReport(BaseModel):
    n_max: int = Field(..., description="Largest poset size checked")
    catalogue_size: int = Field(..., description="Number of bounded posets checked")
    graph_count: int = Field(..., description="Number of graphs checked")
    mutation: Optional[str] = Field(None, description="Negative control applied, if any")
    verified: bool = Field(..., description="Whether no discrepancy was found")
    theorems: List[TheoremSummary] = Field(..., description="Per-theorem tallies")
    discrepancies: List[DiscrepancyEntry] = Field(..., description="Every broken instance")
    coverage: Dict[str, bool] = Field(..., description="Operations exercised by the run")
    observations: Dict[str, ObservationCount] = Field(..., description="Recorded but unasserted facts")
    unbounded: UnboundedNote = Field(..., description="Chain/Boolean counterexample without bounds")
    posets: List[PosetSummary] = Field(..., description="Per-poset verdicts in canonical order")
