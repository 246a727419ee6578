//! The diagonal of a relation: `diagonal(R) = R ∩ (R\R/R)˘`.
//!
//! The diagonal is the largest difunctional sub-relation of `R` that is
//! "compatible" with R's row/column structure. It drives the block-order
//! decomposition: `R` is block-ordered exactly when the diagonal spans
//! both domains of `R`.

use crate::rel::Rel;
use crate::residual::sandwich;

/// ΔR = R ∩ (R\R/R)˘.
pub fn diagonal(r: &Rel) -> Rel {
    r.meet(&sandwich(r, r, r).converse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use crate::domain::{difunctional_battery, ldom, per_ldom, per_rdom, rdom};
    use crate::rel::Rel;
    use std::sync::Arc;

    fn c(name: &str, n: usize) -> Arc<Carrier> {
        Carrier::numbered(name, n)
    }

    /// Independent oracle: ΔR = R ∩ ¬(R ∘ ¬(R˘) ∘ R).
    fn diagonal_oracle(r: &Rel) -> Rel {
        r.meet(
            &r.compose(&r.converse().complement())
                .compose(r)
                .complement(),
        )
    }

    fn all_rels(a: &Arc<Carrier>, b: &Arc<Carrier>) -> Vec<Rel> {
        let bits = a.size() * b.size();
        (0u32..1 << bits)
            .map(|m| Rel::from_fn(a, b, |x, y| m >> (x * b.size() + y) & 1 == 1))
            .collect()
    }

    fn some_rels(a: &Arc<Carrier>, b: &Arc<Carrier>, n: usize) -> Vec<Rel> {
        (0..n)
            .map(|k| Rel::from_fn(a, b, |x, y| (x * 7 + y * 11 + k * 5) % 9 < 4))
            .collect()
    }

    #[test]
    fn matches_complement_oracle_exhaustively() {
        for (na, nb) in [(2usize, 2usize), (2, 3), (3, 3)] {
            let a = c("A", na);
            let b = c("B", nb);
            for r in all_rels(&a, &b) {
                assert_eq!(diagonal(&r), diagonal_oracle(&r), "on {r:?}");
            }
        }
    }

    #[test]
    fn diagonal_is_always_difunctional() {
        let a = c("A", 3);
        let b = c("B", 3);
        for r in all_rels(&a, &b) {
            let d = diagonal(&r);
            assert!(difunctional_battery(&d).verdict(), "Δ{r:?} = {d:?}");
        }
    }

    #[test]
    fn diagonal_fixes_difunctionals_and_only_them() {
        let a = c("A", 3);
        let b = c("B", 3);
        for r in all_rels(&a, &b) {
            let fixed = diagonal(&r) == r;
            assert_eq!(fixed, difunctional_battery(&r).verdict(), "on {r:?}");
        }
    }

    #[test]
    fn diagonal_commutes_with_converse() {
        let a = c("A", 4);
        let b = c("B", 3);
        for r in some_rels(&a, &b, 14) {
            assert_eq!(diagonal(&r.converse()), diagonal(&r).converse());
        }
    }

    #[test]
    fn diagonal_of_preorder_is_symmetric_part() {
        // For any preorder T (reflexive and transitive): ΔT = T ∩ T˘.
        let a = c("A", 4);
        for k in 0..10 {
            let t = Rel::from_fn(&a, &a, |x, y| (x * 3 + y * 7 + k) % 5 < 2).rtc();
            assert!(t.is_reflexive() && t.is_transitive());
            assert_eq!(diagonal(&t), t.meet(&t.converse()));
        }
    }

    #[test]
    fn four_chain_strict_less_diagonal_is_successor() {
        let n = c("N4", 4);
        let lt = Rel::from_fn(&n, &n, |a, b| a < b);
        // (lt\lt/lt)˘ = {(a,b) : b ≤ a+1 or a = 3}
        let sw = crate::residual::sandwich(&lt, &lt, &lt).converse();
        assert_eq!(sw, Rel::from_fn(&n, &n, |a, b| b <= a + 1 || a == 3));
        assert_eq!(
            diagonal(&lt),
            Rel::from_pairs(&n, &n, [(0, 1), (1, 2), (2, 3)])
        );
    }

    #[test]
    fn per_domains_of_diagonal_restrict_per_domains() {
        // (ΔR)<per = (ΔR)< ∘ R<per = R<per ∘ (ΔR)<, and the right-hand dual.
        let a = c("A", 4);
        let b = c("B", 4);
        for r in some_rels(&a, &b, 16) {
            let d = diagonal(&r);
            assert_eq!(per_ldom(&d), ldom(&d).compose(&per_ldom(&r)));
            assert_eq!(per_ldom(&d), per_ldom(&r).compose(&ldom(&d)));
            assert_eq!(per_rdom(&d), rdom(&d).compose(&per_rdom(&r)));
            assert_eq!(per_rdom(&d), per_rdom(&r).compose(&rdom(&d)));
        }
    }

    #[test]
    fn diagonal_domains_inside_relation_domains() {
        let a = c("A", 4);
        let b = c("B", 3);
        for r in some_rels(&a, &b, 16) {
            let d = diagonal(&r);
            assert!(ldom(&d).leq(&ldom(&r)));
            assert!(rdom(&d).leq(&rdom(&r)));
        }
    }

    #[test]
    fn empty_and_full() {
        let a = c("A", 3);
        let b = c("B", 2);
        assert_eq!(diagonal(&Rel::bottom(&a, &b)), Rel::bottom(&a, &b));
        assert_eq!(diagonal(&Rel::top(&a, &b)), Rel::top(&a, &b));
        let e = c("E", 0);
        assert_eq!(diagonal(&Rel::bottom(&e, &b)), Rel::bottom(&e, &b));
    }
}
