//! Residuals (factors) and symmetric divisions.
//!
//! For `R : A~B`, `S : A~C`, `T : D~C`:
//!
//! * `under(R,S)` is R\S : B~C, the largest X with R∘X ⊆ S; pointwise
//!   `b (R\S) c ≡ ∀a: a R b ⇒ a S c`.
//! * `over(S,T)` is S/T : A~D, the largest X with X∘T ⊆ S; pointwise
//!   `a (S/T) d ≡ ∀c: d T c ⇒ a S c`.
//! * `sandwich(R,S,T)` is R\S/T : B~D, which associates both ways.
//! * `sym_rdiv(R,S)` is R\\S = (R\S) ∩ (S\R)˘; `sym_rdiv(R,R)` is an
//!   equivalence relation ("same column set").
//! * `sym_ldiv(R,S)` is R//S = (R/S) ∩ (S/R)˘.
//!
//! The production path computes residuals by the word-parallel complement
//! formulas R\S = ¬(R˘∘¬S) and S/T = ¬(¬S∘T˘); the definitional
//! quantifier evaluation exists in the test suite as an independent oracle.
//! `sandwich` evaluates both the factor path and the complement formula
//! ¬(R˘∘¬S∘T˘) and insists they agree bit-exactly.

use crate::carrier::require_same;
use crate::rel::Rel;

/// R\S — the left residual `under`: largest X with R∘X ⊆ S.
pub fn under(r: &Rel, s: &Rel) -> Rel {
    require_same("under", r.target(), s.target());
    r.converse().compose(&s.complement()).complement()
}

/// S/T — the right residual `over`: largest X with X∘T ⊆ S.
pub fn over(s: &Rel, t: &Rel) -> Rel {
    require_same("over", s.source(), t.source());
    s.complement().compose(&t.converse()).complement()
}

/// R\S/T — computed as (R\S)/T and as ¬(R˘∘¬S∘T˘); the two must agree.
pub fn sandwich(r: &Rel, s: &Rel, t: &Rel) -> Rel {
    let via_factors = over(&under(r, s), t);
    let via_complement = r
        .converse()
        .compose(&s.complement())
        .compose(&t.converse())
        .complement();
    assert!(
        via_factors == via_complement,
        "sandwich: factor evaluation and complement evaluation disagree \
         (this indicates an internal defect)"
    );
    via_factors
}

/// R\\S = (R\S) ∩ (S\R)˘ — symmetric right-division.
pub fn sym_rdiv(r: &Rel, s: &Rel) -> Rel {
    under(r, s).meet(&under(s, r).converse())
}

/// R//S = (R/S) ∩ (S/R)˘ — symmetric left-division.
pub fn sym_ldiv(r: &Rel, s: &Rel) -> Rel {
    over(r, s).meet(&over(s, r).converse())
}
