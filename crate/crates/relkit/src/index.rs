//! Indexes of pers and relations, splitting, cores, and isomorphism of
//! relations up to carrier renaming.
//!
//! * An *index* of a per `P` is a coreflexive `J` choosing exactly one
//!   member from each class: `J ⊆ P<`, `J∘P∘J = J`, `P∘J∘P = P`.
//! * `split(P)` turns a per into a surjective pair: a fresh carrier `C`
//!   of class representatives and a functional `f : C ~ A` with
//!   `f˘∘f = P` and `f∘f˘ = I_C`.
//! * An index of a general relation `R` keeps one entry per block pair:
//!   `J ⊆ R`, `R<per∘J∘R>per = R`, `J<∘R<per∘J< = J<`, `J>∘R>per∘J> = J>`.
//! * The *core* of `R` collapses both per domains: `C = λ∘R∘ρ˘` with
//!   `λ = split(R<per).f`, `ρ = split(R>per).f`, and `R = λ˘∘C∘ρ`.
//! * `are_isomorphic` searches for renaming bijections φ, ψ with
//!   `φ˘∘R∘ψ = S`, reporting an explicit witness pair, a proof of
//!   absence, or `Unknown` past the search budget.

use std::collections::HashMap;
use std::sync::Arc;

use crate::carrier::Carrier;
use crate::domain::{is_per, ldom, per_ldom, per_rdom, rdom};
use crate::error::RelError;
use crate::rel::Rel;

/// Which class member a per index selects when building representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// The member that comes first in carrier order (the default).
    First,
    /// The member that comes last in carrier order.
    Last,
}

/// The index of a per: a coreflexive choosing the first member (in
/// carrier order) of each class. Panics if `p` is not a per.
pub fn per_index(p: &Rel) -> Rel {
    per_index_with(p, TieBreak::First)
}

/// As `per_index`, with an explicit representative tie-break.
pub fn per_index_with(p: &Rel, tie: TieBreak) -> Rel {
    assert!(is_per(p), "per_index: input is not a per: {p:?}");
    let n = p.target().size();
    let mut covered = vec![false; n];
    let mut out = Rel::bottom(p.target(), p.target());
    let order: Vec<usize> = match tie {
        TieBreak::First => (0..n).collect(),
        TieBreak::Last => (0..n).rev().collect(),
    };
    for a in order {
        if p.get(a, a) && !covered[a] {
            out.set(a, a, true);
            for b in 0..n {
                if p.get(a, b) {
                    covered[b] = true;
                }
            }
        }
    }
    out
}

/// Does `j` index the per `p`? Checks the three defining clauses.
pub fn is_per_index(j: &Rel, p: &Rel) -> bool {
    assert!(is_per(p), "is_per_index: second argument is not a per: {p:?}");
    j.leq(&ldom(p)) && j.compose(p).compose(j) == *j && p.compose(j).compose(p) == *p
}

/// A per split into a class carrier and the projection onto it.
#[derive(Debug, Clone)]
pub struct Splitting {
    /// The projection `f : C ~ A`, with `f˘∘f` the original per and
    /// `f∘f˘ = I_C`.
    pub f: Rel,
    /// For each class (in carrier-`C` order) the representative's
    /// position in the base carrier.
    pub reps: Vec<usize>,
}

impl Splitting {
    /// The fresh carrier of classes.
    pub fn class_carrier(&self) -> &Arc<Carrier> {
        self.f.target()
    }
}

/// Split a per into classes: a fresh carrier named `<base>/per` whose
/// labels are the representatives' labels, and the projection `f`.
/// Panics if `p` is not a per.
pub fn split(p: &Rel) -> Splitting {
    split_with(p, TieBreak::First)
}

/// As `split`, with an explicit representative tie-break.
pub fn split_with(p: &Rel, tie: TieBreak) -> Splitting {
    let j = per_index_with(p, tie);
    let base = p.target();
    let reps: Vec<usize> = (0..base.size()).filter(|&a| j.get(a, a)).collect();
    let labels: Vec<String> = reps.iter().map(|&a| base.label(a).to_string()).collect();
    let name = format!("{}/per", base.name());
    let c = Carrier::new(&name, labels)
        .expect("split: class labels are distinct members of a valid carrier");
    let f = Rel::from_fn(&c, base, |ci, a| p.get(reps[ci], a));
    let split = Splitting { f, reps };
    debug_assert!(split.f.converse().compose(&split.f) == *p);
    debug_assert!(
        split.f.compose(&split.f.converse()) == Rel::identity(split.class_carrier())
    );
    split
}

/// An index of an arbitrary relation: one entry per block pair,
/// `rel_index(R) = J_l ∘ R ∘ J_r` with `J_l`, `J_r` the per indexes of
/// the two per domains.
pub fn rel_index(r: &Rel) -> Rel {
    let jl = per_index(&per_ldom(r));
    let jr = per_index(&per_rdom(r));
    jl.compose(r).compose(&jr)
}

/// Does `j` index the relation `r`? Checks the four defining clauses.
pub fn is_index(j: &Rel, r: &Rel) -> bool {
    let lp = per_ldom(r);
    let rp = per_rdom(r);
    let jl = ldom(j);
    let jr = rdom(j);
    j.leq(r)
        && lp.compose(j).compose(&rp) == *r
        && jl.compose(&lp).compose(&jl) == jl
        && jr.compose(&rp).compose(&jr) == jr
}

/// Does `j` index the difunctional relation `r`? Checks the four
/// clauses specialized to difunctionals (`R∘J˘∘R = R` replaces the per
/// domain conditions at the heart of the definition).
pub fn is_difunction_index(j: &Rel, r: &Rel) -> bool {
    let jl = ldom(j);
    let jr = rdom(j);
    let rrc = r.compose(&r.converse());
    let rcr = r.converse().compose(r);
    j.leq(r)
        && r.compose(&j.converse()).compose(r) == *r
        && jl.compose(&rrc).compose(&jl) == jl
        && jr.compose(&rcr).compose(&jr) == jr
}

/// Split a difunctional relation `R` into functionals `(f, g)` onto a
/// fresh block carrier: `f˘∘g = R`, with `f∘f˘` and `g∘g˘` both the
/// identity on the block carrier. Errors if `r` is not difunctional.
pub fn difunction_split(r: &Rel) -> Result<(Rel, Rel), RelError> {
    if !crate::domain::is_difunctional(r) {
        return Err(RelError::precondition(format!(
            "difunction_split: relation is not difunctional: {r:?}"
        )));
    }
    let f = split(&per_ldom(r)).f;
    let g = f.compose(r);
    let ic = Rel::identity(f.target());
    assert!(f.converse().compose(&g) == *r, "difunction_split: f˘∘g must recompose the input");
    assert!(f.compose(&f.converse()) == ic && g.compose(&g.converse()) == ic);
    Ok((f, g))
}

/// The core of a relation together with the collapsing projections.
#[derive(Debug, Clone)]
pub struct CoreWitness {
    /// The core `C = λ∘R∘ρ˘` on fresh class carriers.
    pub core: Rel,
    /// `λ = split(R<per).f`, collapsing the left per domain.
    pub lambda: Rel,
    /// `ρ = split(R>per).f`, collapsing the right per domain.
    pub rho: Rel,
}

impl CoreWitness {
    /// `λ˘∘C∘ρ` — must equal the original relation.
    pub fn recompose(&self) -> Rel {
        self.lambda
            .converse()
            .compose(&self.core)
            .compose(&self.rho)
    }

    /// Assert every defining invariant against the original relation.
    pub fn verify(&self, r: &Rel) {
        let l = &self.lambda;
        let p = &self.rho;
        let c = &self.core;
        assert!(l.converse().compose(l) == per_ldom(r));
        assert!(p.converse().compose(p) == per_rdom(r));
        assert!(l.compose(&l.converse()) == Rel::identity(l.target()));
        assert!(p.compose(&p.converse()) == Rel::identity(p.target()));
        assert!(self.recompose() == *r, "core witness does not recompose its relation");
        assert!(ldom(r) == rdom(l));
        assert!(rdom(r) == rdom(p));
        assert!(ldom(c) == Rel::identity(c.target()));
        assert!(rdom(c) == Rel::identity(c.source()));
        assert!(is_core(c));
    }
}

/// Is `r` its own core, i.e. are both per domains trivial (coreflexive)?
pub fn is_core(r: &Rel) -> bool {
    per_ldom(r) == ldom(r) && per_rdom(r) == rdom(r)
}

/// Collapse both per domains of `r`, yielding its core and the
/// projections λ, ρ.
pub fn core_of(r: &Rel) -> CoreWitness {
    core_of_with(r, TieBreak::First)
}

/// As `core_of`, with an explicit representative tie-break for both
/// projections.
pub fn core_of_with(r: &Rel, tie: TieBreak) -> CoreWitness {
    let lambda = split_with(&per_ldom(r), tie).f;
    let rho = split_with(&per_rdom(r), tie).f;
    let core = lambda.compose(r).compose(&rho.converse());
    CoreWitness { core, lambda, rho }
}

/// Result of an isomorphism search between two relations.
#[derive(Debug, Clone)]
pub enum IsoVerdict {
    /// Witnessing bijections: `phi : A_r ~ A_s`, `psi : B_r ~ B_s`
    /// with `phi˘ ∘ R ∘ psi = S`.
    Found { phi: Rel, psi: Rel },
    /// No isomorphism exists.
    Absent,
    /// The search budget was exceeded; existence was not decided.
    Unknown,
}

impl IsoVerdict {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoVerdict::Found { .. })
    }
}

/// Largest row-carrier size (after orienting the search along the
/// smaller dimension) for which `are_isomorphic` will search
/// exhaustively rather than return `Unknown`.
pub const ISO_SEARCH_LIMIT: usize = 10;

/// Search for carrier-renaming bijections turning `r` into `s`.
///
/// `Found { phi, psi }` comes with the laws asserted:
/// `phi˘∘r∘psi = s`, and both witnesses are total surjective bijections.
/// `Absent` is a proof (the search was exhaustive). `Unknown` means the
/// smaller dimension exceeds `ISO_SEARCH_LIMIT`.
pub fn are_isomorphic(r: &Rel, s: &Rel) -> IsoVerdict {
    if r.target().size() != s.target().size() || r.source().size() != s.source().size() {
        return IsoVerdict::Absent;
    }
    if r.count() != s.count() {
        return IsoVerdict::Absent;
    }
    // Search along the smaller dimension; converse-everything otherwise.
    if r.target().size() > r.source().size() {
        return match are_isomorphic(&r.converse(), &s.converse()) {
            IsoVerdict::Found { phi, psi } => {
                IsoVerdict::Found { phi: psi, psi: phi }
            }
            other => other,
        };
    }
    let n = r.target().size();
    if n > ISO_SEARCH_LIMIT {
        return IsoVerdict::Unknown;
    }

    let row_deg = |rel: &Rel, a: usize| (0..rel.source().size()).filter(|&b| rel.get(a, b)).count();
    let mut r_degs: Vec<usize> = (0..n).map(|a| row_deg(r, a)).collect();
    let s_degs: Vec<usize> = (0..n).map(|a| row_deg(s, a)).collect();
    {
        let mut x = r_degs.clone();
        let mut y = s_degs.clone();
        x.sort_unstable();
        y.sort_unstable();
        if x != y {
            return IsoVerdict::Absent;
        }
    }
    // Assign high-degree rows first: they are the most constrained.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| std::cmp::Reverse(r_degs[a]));
    r_degs = order.iter().map(|&a| row_deg(r, a)).collect();

    let m = r.source().size();
    let mut image: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];

    // Column fingerprints over the assigned prefix: bit j set when the
    // column relates the j-th assigned row (resp. its image). The two
    // multisets must stay equal for a completion to exist.
    fn prefix_consistent(
        r: &Rel,
        s: &Rel,
        order: &[usize],
        image: &[usize],
        m: usize,
    ) -> bool {
        let mut pr: Vec<u64> = vec![0; m];
        let mut ps: Vec<u64> = vec![0; m];
        for (j, (&a, &i)) in order.iter().zip(image.iter()).enumerate() {
            for b in 0..m {
                if r.get(a, b) {
                    pr[b] |= 1 << j;
                }
                if s.get(i, b) {
                    ps[b] |= 1 << j;
                }
            }
        }
        pr.sort_unstable();
        ps.sort_unstable();
        pr == ps
    }

    fn backtrack(
        r: &Rel,
        s: &Rel,
        order: &[usize],
        r_degs: &[usize],
        s_degs: &[usize],
        image: &mut Vec<usize>,
        used: &mut [bool],
        m: usize,
    ) -> bool {
        let depth = image.len();
        if depth == order.len() {
            return true;
        }
        for cand in 0..order.len() {
            if used[cand] || s_degs[cand] != r_degs[depth] {
                continue;
            }
            image.push(cand);
            used[cand] = true;
            if prefix_consistent(r, s, &order[..depth + 1], image, m)
                && backtrack(r, s, order, r_degs, s_degs, image, used, m)
            {
                return true;
            }
            used[cand] = false;
            image.pop();
        }
        false
    }

    if !backtrack(r, s, &order, &r_degs, &s_degs, &mut image, &mut used, m) {
        return IsoVerdict::Absent;
    }

    // Build ψ by matching full column fingerprints; candidate sets for
    // distinct fingerprints are disjoint, so any within-group pairing works.
    let mut groups: HashMap<u64, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for b in 0..m {
        let mut mask = 0u64;
        for (j, &a) in order.iter().enumerate() {
            if r.get(a, b) {
                mask |= 1 << j;
            }
        }
        groups.entry(mask).or_default().0.push(b);
    }
    for b in 0..m {
        let mut mask = 0u64;
        for (j, &i) in image.iter().enumerate() {
            if s.get(i, b) {
                mask |= 1 << j;
            }
        }
        groups.entry(mask).or_default().1.push(b);
    }
    let mut psi = Rel::bottom(r.source(), s.source());
    for (_, (rb, sb)) in groups {
        assert!(
            rb.len() == sb.len(),
            "column matching out of balance after a consistent row assignment (internal defect)"
        );
        for (b, bp) in rb.into_iter().zip(sb) {
            psi.set(b, bp, true);
        }
    }
    let mut phi = Rel::bottom(r.target(), s.target());
    for (&a, &i) in order.iter().zip(image.iter()) {
        phi.set(a, i, true);
    }

    let ir_t = Rel::identity(r.target());
    let is_t = Rel::identity(s.target());
    let ir_s = Rel::identity(r.source());
    let is_s = Rel::identity(s.source());
    assert!(phi.compose(&phi.converse()) == ir_t && phi.converse().compose(&phi) == is_t);
    assert!(psi.compose(&psi.converse()) == ir_s && psi.converse().compose(&psi) == is_s);
    assert!(
        phi.converse().compose(r).compose(&psi) == *s,
        "isomorphism witness fails its defining law (internal defect)"
    );
    IsoVerdict::Found { phi, psi }
}
