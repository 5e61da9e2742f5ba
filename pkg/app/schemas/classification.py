from pydantic import BaseModel, Field
from typing import List, Optional

class NonDaceyWitness(BaseModel):
    closed_set: List[str] = Field(..., description="Orthoclosed set, as quotient or point labels")
    basis: List[str] = Field(..., description="Basis of the set whose closure falls short of it")

class Witnesses(BaseModel):
    missing_bound: Optional[List[str]] = Field(None, description="Pair of elements without a meet or a join")
    incomparable: Optional[List[str]] = Field(None, description="Pair of incomparable elements")
    nonlattice_ideal: Optional[List[str]] = Field(None, description="Closed ideal with two or more maximal elements")
    non_chain_type: Optional[List[str]] = Field(None, description="Orthoclosed set that is not of chain type")
    non_dacey: Optional[NonDaceyWitness] = Field(None, description="First non-Dacey orthoclosed set and basis")
    short_basis: Optional[NonDaceyWitness] = Field(None, description="τ(I) and its basis {[0<a]} for a closed ideal I")
    orthomodular_failure: Optional[List[str]] = Field(None, description="Pair x <= y breaking the orthomodular law")
    boolean_failure: Optional[List[str]] = Field(None, description="Pair with a ∧ b = 0 but a not below b⊥")
    hexagon: Optional[List[str]] = Field(None, description="Hexagon (0, a, b, b⊥, a⊥, 1) inside the logic")
    disjoint_pair: Optional[List[List[str]]] = Field(None, description="Disjoint non-orthogonal closed sets")

class ClassificationReport(BaseModel):
    poset: str = Field(..., description="The poset in text form")
    bounded: bool = Field(..., description="Whether the poset has a least and a greatest element")
    lattice: bool = Field(..., description="Whether every pair has a meet and a join")
    chain: bool = Field(..., description="Whether the poset is totally ordered")
    chain_type: bool = Field(..., description="Whether every orthoclosed set of Q(P) is of chain type")
    dacey: bool = Field(..., description="Whether Q(P) is a Dacey space")
    orthomodular: bool = Field(..., description="Whether the logic of Q(P) is orthomodular")
    boolean: bool = Field(..., description="Whether the logic of Q(P) is a Boolean algebra")
    theorems_apply: bool = Field(..., description="Whether the structure theorems' hypotheses hold")
    witnesses: Witnesses = Field(..., description="Counterexamples for every failing verdict")
    logic_size: int = Field(..., description="Number of orthoclosed subsets of Q(P)")
    q_size: int = Field(..., description="Number of proper quotients")

class WitnessReport(BaseModel):
    subject: str = Field(..., description="The poset or space in text form")
    non_dacey: Optional[NonDaceyWitness] = Field(None, description="First non-Dacey orthoclosed set and basis")
    short_basis: Optional[NonDaceyWitness] = Field(None, description="τ(I) and its basis {[0<a]}")
    hexagon: Optional[List[str]] = Field(None, description="Hexagon inside the logic")
    nonlattice_ideal: Optional[List[str]] = Field(None, description="Closed ideal with two maximal elements")
    found: bool = Field(..., description="Whether any witness was found")
