//! Galois adjoints of a relation against complete lattices on its
//! carriers, and the pair-algebra test.
//!
//! A heterogeneous relation `R : A ~ B`, an order on `A`, and an order
//! on `B` form a *pair algebra* when `R` is simultaneously the graph of
//! a lower adjoint (`R(a,b) ≡ F.a ⊑ b`) and of an upper adjoint
//! (`R(a,b) ≡ a ⊑ G.b`). Either adjoint alone may exist or fail; both
//! directions are decided constructively.

use crate::carrier::require_same;
use crate::error::RelError;
use crate::rel::Rel;

/// Largest carrier size for which the explicit all-subsets
/// complete-lattice check runs (2^n subsets).
pub const LATTICE_CHECK_LIMIT: usize = 12;

/// Check that `order` is a partial order whose every subset has an
/// infimum (hence a complete lattice). Explicitly enumerates all 2^n
/// subsets; carriers larger than `LATTICE_CHECK_LIMIT` are rejected as
/// too large.
pub fn check_complete_lattice(order: &Rel) -> Result<(), RelError> {
    assert!(
        order.is_homogeneous(),
        "check_complete_lattice: requires a homogeneous relation, got `{}` ~ `{}`",
        order.target().name(),
        order.source().name()
    );
    let n = order.target().size();
    if n > LATTICE_CHECK_LIMIT {
        return Err(RelError::TooLarge(format!(
            "complete-lattice check enumerates 2^{n} subsets; the limit is 2^{LATTICE_CHECK_LIMIT}"
        )));
    }
    if !order.is_reflexive()
        || !order.is_transitive()
        || !order.meet(&order.converse()).leq(&Rel::identity(order.target()))
    {
        return Err(RelError::precondition(format!(
            "not a partial order on `{}`",
            order.target().name()
        )));
    }
    for subset in 0u32..1 << n {
        if infimum(order, subset).is_none() {
            let members: Vec<&str> = (0..n)
                .filter(|&i| subset >> i & 1 == 1)
                .map(|i| order.target().label(i))
                .collect();
            return Err(RelError::precondition(format!(
                "not a complete lattice: {{{}}} has no infimum under the order on `{}`",
                members.join(", "),
                order.target().name()
            )));
        }
    }
    Ok(())
}

/// The greatest lower bound of the subset (given as a bit mask) under
/// `order`, if it exists. The infimum of the empty subset is the top
/// element.
fn infimum(order: &Rel, subset: u32) -> Option<usize> {
    let n = order.target().size();
    let in_subset = |i: usize| subset >> i & 1 == 1;
    let lower: Vec<usize> = (0..n)
        .filter(|&x| (0..n).all(|s| !in_subset(s) || order.get(x, s)))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&g| lower.iter().all(|&l| order.get(l, g)))
}

/// The lower adjoint of `r : A ~ B` against a complete-lattice order
/// on `B`, if one exists: a functional `F : B ~ A` (mapping each `a`
/// to `F.a`) with `R(a,b) ≡ F.a ⊑ b` for all `a`, `b`.
///
/// Candidate construction: `F.a` is the infimum of the fiber
/// `{b : R(a,b)}` (the top element when the fiber is empty). Two
/// characterizations of success — the pointwise equivalence and the
/// algebraic equation `R = F˘∘order` — are evaluated independently and
/// asserted to agree.
pub fn lower_adjoint(r: &Rel, order_b: &Rel) -> Result<Option<Rel>, RelError> {
    require_same("lower_adjoint", r.source(), order_b.target());
    check_complete_lattice(order_b)?;
    let na = r.target().size();
    let nb = r.source().size();
    let mut f = Rel::bottom(r.source(), r.target());
    for a in 0..na {
        let fiber = (0..nb).filter(|&b| r.get(a, b)).fold(0u32, |m, b| m | 1 << b);
        let inf = infimum(order_b, fiber)
            .expect("every subset of a checked complete lattice has an infimum");
        f.set(inf, a, true);
    }
    let pointwise = (0..na).all(|a| {
        (0..nb).all(|b| {
            let fa = (0..nb).find(|&y| f.get(y, a)).expect("F is total by construction");
            r.get(a, b) == order_b.get(fa, b)
        })
    });
    let algebraic = *r == f.converse().compose(order_b);
    assert!(
        pointwise == algebraic,
        "lower_adjoint: pointwise and algebraic characterizations disagree (internal defect)"
    );
    Ok(if algebraic { Some(f) } else { None })
}

/// The upper adjoint of `r : A ~ B` against a complete-lattice order
/// on `A`, if one exists: a functional `G : A ~ B` with
/// `R(a,b) ≡ a ⊑ G.b`. Computed as the lower adjoint of the converse
/// relation against the reversed order.
pub fn upper_adjoint(r: &Rel, order_a: &Rel) -> Result<Option<Rel>, RelError> {
    require_same("upper_adjoint", r.target(), order_a.target());
    lower_adjoint(&r.converse(), &order_a.converse())
}

/// Both adjoints of `r`, or the reason neither can be decided.
pub fn adjoints(
    r: &Rel,
    order_a: &Rel,
    order_b: &Rel,
) -> Result<(Option<Rel>, Option<Rel>), RelError> {
    Ok((lower_adjoint(r, order_b)?, upper_adjoint(r, order_a)?))
}

/// Is `(r, order_a, order_b)` a pair algebra, i.e. do both adjoints
/// exist?
pub fn is_pair_algebra(r: &Rel, order_a: &Rel, order_b: &Rel) -> Result<bool, RelError> {
    let (lo, up) = adjoints(r, order_a, order_b)?;
    Ok(lo.is_some() && up.is_some())
}
