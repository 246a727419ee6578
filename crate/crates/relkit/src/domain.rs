//! Domain operators, per domains, functionality, rectangles, and the
//! seven-way difunctionality battery.
//!
//! * `ldom(R)` (written R<) is the coreflexive `I ∩ R∘R˘`: the set of
//!   targets actually related to something. `rdom(R)` (R>) is the dual.
//! * `per_rdom(R)` (R>per) is `R> ∘ (R\\R)`, a per capturing "same column
//!   set within the right domain"; `per_ldom(R)` (R<per) is the dual.
//! * A *per* is a symmetric transitive (homogeneous) relation.
//! * `f` is functional when `f∘f˘ ⊆ I`, i.e. `f` maps each source element
//!   to at most one target.
//! * A *rectangle* satisfies `R = R∘⊤∘R`; a *square* is a symmetric
//!   rectangle (and every square is a per).
//! * `difunctional_battery` evaluates seven equivalent characterizations
//!   of difunctionality independently; they must agree on every relation.

use crate::rel::Rel;
use crate::residual::{over, sandwich, sym_ldiv, sym_rdiv, under};

/// R< — the coreflexive left domain, as a relation on the target carrier.
pub fn ldom(r: &Rel) -> Rel {
    // Fast path: a target is in the domain iff its row is nonempty.
    // (Equal to I ∩ R∘R˘; the definitional form is checked in tests.)
    let mut out = Rel::bottom(r.target(), r.target());
    for a in 0..r.target().size() {
        if (0..r.source().size()).any(|b| r.get(a, b)) {
            out.set(a, a, true);
        }
    }
    out
}

/// R> — the coreflexive right domain, as a relation on the source carrier.
pub fn rdom(r: &Rel) -> Rel {
    let mut out = Rel::bottom(r.source(), r.source());
    for b in 0..r.source().size() {
        if (0..r.target().size()).any(|a| r.get(a, b)) {
            out.set(b, b, true);
        }
    }
    out
}

/// R>per = R> ∘ (R\\R) — the right per domain. The alternative form
/// (R\\R) ∘ R> must agree; the operation asserts this internally.
pub fn per_rdom(r: &Rel) -> Rel {
    let d = sym_rdiv(r, r);
    let rd = rdom(r);
    let a = rd.compose(&d);
    let b = d.compose(&rd);
    assert!(a == b, "per_rdom: the two defining forms disagree (internal defect)");
    a
}

/// R<per = (R//R) ∘ R< — the left per domain (dual of `per_rdom`).
pub fn per_ldom(r: &Rel) -> Rel {
    let d = sym_ldiv(r, r);
    let ld = ldom(r);
    let a = d.compose(&ld);
    let b = ld.compose(&d);
    assert!(a == b, "per_ldom: the two defining forms disagree (internal defect)");
    a
}

/// Is `p` a sub-relation of the identity?
pub fn is_coreflexive(p: &Rel) -> bool {
    p.is_coreflexive()
}

/// Is `p` a per (symmetric and transitive)? Panics on heterogeneous input.
pub fn is_per(p: &Rel) -> bool {
    assert!(
        p.is_homogeneous(),
        "is_per: requires a homogeneous relation, got `{}` ~ `{}`",
        p.target().name(),
        p.source().name()
    );
    p.is_symmetric() && p.is_transitive()
}

/// Is `R = R∘⊤∘R`?
pub fn is_rectangle(r: &Rel) -> bool {
    let top = Rel::top(r.source(), r.target());
    r.compose(&top).compose(r) == *r
}

/// Is `r` a symmetric rectangle? Panics on heterogeneous input.
pub fn is_square(r: &Rel) -> bool {
    assert!(
        r.is_homogeneous(),
        "is_square: requires a homogeneous relation, got `{}` ~ `{}`",
        r.target().name(),
        r.source().name()
    );
    is_rectangle(r) && r.is_symmetric()
}

/// `f∘f˘ ⊆ I` — each source element has at most one image.
pub fn is_functional(f: &Rel) -> bool {
    f.compose(&f.converse()).leq(&Rel::identity(f.target()))
}

/// The converse is functional.
pub fn is_injective(f: &Rel) -> bool {
    is_functional(&f.converse())
}

/// Functional and injective.
pub fn is_bijection(f: &Rel) -> bool {
    is_functional(f) && is_injective(f)
}

/// The quick difunctionality test: R∘R˘∘R ⊆ R.
pub fn is_difunctional(r: &Rel) -> bool {
    r.compose(&r.converse()).compose(r).leq(r)
}

/// Results of evaluating the seven equivalent difunctionality
/// characterizations independently.
#[derive(Debug, Clone)]
pub struct Battery {
    pub forms: [(&'static str, bool); 7],
}

impl Battery {
    /// Do all seven forms give the same verdict?
    pub fn agree(&self) -> bool {
        self.forms.iter().all(|&(_, v)| v == self.forms[0].1)
    }

    /// The common verdict; panics if the forms disagree (an internal defect).
    pub fn verdict(&self) -> bool {
        assert!(
            self.agree(),
            "difunctionality battery disagreement (internal defect): {:?}",
            self.forms
        );
        self.forms[0].1
    }
}

/// Evaluate all seven characterizations of difunctionality, independently.
pub fn difunctional_battery(r: &Rel) -> Battery {
    let conv = r.converse();
    let round = r.compose(&conv).compose(r);
    let rr_under = under(r, r);
    let rr_over = over(r, r);
    let forms = [
        ("roundtrip-contained", round.leq(r)),
        ("roundtrip-equal", round == *r),
        ("rdom-times-under-self", rdom(r).compose(&rr_under) == conv.compose(r)),
        ("right-per-domain", per_rdom(r) == conv.compose(r)),
        ("over-self-times-ldom", rr_over.compose(&ldom(r)) == r.compose(&conv)),
        ("left-per-domain", per_ldom(r) == r.compose(&conv)),
        ("diagonal-fixed", *r == r.meet(&sandwich(r, r, r).converse())),
    ];
    Battery { forms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use std::sync::Arc;

    fn c(name: &str, n: usize) -> Arc<Carrier> {
        Carrier::numbered(name, n)
    }

    /// Definitional oracle: R< = I ∩ R∘R˘.
    fn ldom_oracle(r: &Rel) -> Rel {
        Rel::identity(r.target()).meet(&r.compose(&r.converse()))
    }

    fn rdom_oracle(r: &Rel) -> Rel {
        Rel::identity(r.source()).meet(&r.converse().compose(r))
    }

    fn some_rels(a: &Arc<Carrier>, b: &Arc<Carrier>, n: usize) -> Vec<Rel> {
        (0..n)
            .map(|k| Rel::from_fn(a, b, |x, y| (x * 5 + y * 13 + k * 7) % 8 < 3))
            .collect()
    }

    fn all_rels(a: &Arc<Carrier>, b: &Arc<Carrier>) -> Vec<Rel> {
        let bits = a.size() * b.size();
        (0u32..1 << bits)
            .map(|m| Rel::from_fn(a, b, |x, y| m >> (x * b.size() + y) & 1 == 1))
            .collect()
    }

    #[test]
    fn domains_match_definitional_oracle() {
        let a = c("A", 4);
        let b = c("B", 3);
        for r in some_rels(&a, &b, 12) {
            assert_eq!(ldom(&r), ldom_oracle(&r));
            assert_eq!(rdom(&r), rdom_oracle(&r));
            assert!(ldom(&r).is_coreflexive());
            assert!(rdom(&r).is_coreflexive());
            // R<∘R = R = R∘R>
            assert_eq!(ldom(&r).compose(&r), r);
            assert_eq!(r.compose(&rdom(&r)), r);
        }
    }

    #[test]
    fn four_chain_domains() {
        let n = c("N4", 4);
        let lt = Rel::from_fn(&n, &n, |a, b| a < b);
        assert_eq!(ldom(&lt), Rel::from_pairs(&n, &n, [(0, 0), (1, 1), (2, 2)]));
        assert_eq!(rdom(&lt), Rel::from_pairs(&n, &n, [(1, 1), (2, 2), (3, 3)]));
        // classes of the per domains are singletons on the 4-chain
        assert_eq!(per_rdom(&lt), rdom(&lt));
        assert_eq!(per_ldom(&lt), ldom(&lt));
    }

    #[test]
    fn per_domains_are_pers_and_satisfy_domain_identities() {
        let a = c("A", 4);
        let b = c("B", 3);
        for r in some_rels(&a, &b, 12) {
            let pr = per_rdom(&r);
            let pl = per_ldom(&r);
            assert!(is_per(&pr));
            assert!(is_per(&pl));
            // (R>per)< = R> = (R>per)> and the left dual
            assert_eq!(ldom(&pr), rdom(&r));
            assert_eq!(rdom(&pr), rdom(&r));
            assert_eq!(ldom(&pl), ldom(&r));
            assert_eq!(rdom(&pl), ldom(&r));
        }
        let id = Rel::identity(&a);
        assert_eq!(per_rdom(&id), id);
    }

    #[test]
    fn per_rdom_of_total_equivalence_is_itself() {
        let a = c("A", 5);
        // equivalence with classes {0,1},{2,3,4}
        let e = Rel::from_fn(&a, &a, |x, y| (x < 2) == (y < 2));
        assert!(is_per(&e) && e.is_reflexive());
        assert_eq!(per_rdom(&e), e);
        assert_eq!(per_ldom(&e), e);
    }

    #[test]
    fn sym_division_domain_identities() {
        let a = c("A", 4);
        let b = c("B", 3);
        for r in some_rels(&a, &b, 12) {
            let d = sym_rdiv(&r, &r);
            let rd = rdom(&r);
            let x = d.compose(&rd);
            let y = rd.compose(&d);
            assert_eq!(rdom(&x), rd);
            assert_eq!(ldom(&x), rd);
            assert_eq!(rdom(&y), rd);
            assert_eq!(ldom(&y), rd);
            assert_eq!(x, y);
            assert_eq!(x, rd.compose(&d).compose(&rd));
        }
    }

    #[test]
    fn functionality_predicates() {
        let n = c("N4", 4);
        let id = Rel::identity(&n);
        assert!(is_functional(&id) && is_injective(&id) && is_bijection(&id));
        assert!(!is_functional(&Rel::top(&n, &n)));
        let succ = Rel::from_fn(&n, &n, |a, b| b + 1 == a); // maps source b to target b+1
        assert!(is_functional(&succ) && is_injective(&succ));
        let collapse = Rel::from_pairs(&n, &n, [(0, 0), (0, 1)]);
        assert!(is_functional(&collapse) && !is_injective(&collapse));
        assert!(!is_functional(&collapse.converse()));
    }

    #[test]
    fn rectangles_and_squares() {
        let a = c("A", 3);
        let b = c("B", 2);
        assert!(is_rectangle(&Rel::bottom(&a, &b)));
        assert!(is_rectangle(&Rel::top(&a, &b)));
        let block = Rel::from_pairs(&a, &b, [(0, 0), (1, 0)]);
        assert!(is_rectangle(&block));
        assert!(difunctional_battery(&block).verdict());
        let sq = Rel::from_fn(&a, &a, |x, y| x < 2 && y < 2);
        assert!(is_square(&sq));
        assert!(is_per(&sq));
        let notrect = Rel::from_pairs(&a, &b, [(0, 0), (1, 1)]);
        assert!(!is_rectangle(&notrect));
    }

    #[test]
    fn battery_examples() {
        let a = c("A", 2);
        assert!(difunctional_battery(&Rel::identity(&a)).verdict());
        assert!(difunctional_battery(&Rel::top(&a, &a)).verdict());
        assert!(difunctional_battery(&Rel::bottom(&a, &a)).verdict());
        // {(0,0),(0,1),(1,1)} is not difunctional
        let r = Rel::from_pairs(&a, &a, [(0, 0), (0, 1), (1, 1)]);
        let bat = difunctional_battery(&r);
        assert!(bat.agree());
        assert!(!bat.verdict());
    }

    #[test]
    fn battery_agrees_exhaustively_on_small_shapes() {
        for (na, nb) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
            let a = c("A", na);
            let b = c("B", nb);
            for r in all_rels(&a, &b) {
                assert!(
                    difunctional_battery(&r).agree(),
                    "battery disagreement on {r:?}"
                );
            }
        }
    }

    #[test]
    fn coreflexive_calculus() {
        let a = c("A", 4);
        let coreflexives: Vec<Rel> = (0u32..16)
            .map(|m| Rel::from_fn(&a, &a, |x, y| x == y && m >> x & 1 == 1))
            .collect();
        for p in &coreflexives {
            assert_eq!(*p, p.converse());
            assert_eq!(*p, p.compose(p));
            for q in &coreflexives {
                assert_eq!(p.compose(q), p.meet(q));
                assert_eq!(p.compose(q), q.compose(p));
            }
        }
    }

    #[test]
    fn domain_restriction_universal_properties() {
        let a = c("A", 3);
        let b = c("B", 2);
        let coreflexives: Vec<Rel> = (0u32..4)
            .map(|m| Rel::from_fn(&b, &b, |x, y| x == y && m >> x & 1 == 1))
            .collect();
        for r in all_rels(&a, &b) {
            for p in &coreflexives {
                // R = R∘p ≡ R> = R>∘p
                assert_eq!(r.compose(p) == r, rdom(&r).compose(p) == rdom(&r));
            }
        }
    }
}
