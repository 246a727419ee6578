//! Condensation of a digraph: collapse strongly connected components
//! (the classes of `Δ(rtc(G))`, i.e. mutual reachability) and order the
//! components by an acyclic relation.
//!
//! The reachability closure factors through the components:
//! `rtc(G) = sc˘ ∘ rtc(A) ∘ sc`, making every closure a block-ordered
//! relation over its component carrier.

use crate::diagonal::diagonal;
use crate::index::split;
use crate::order::BlockOrderDecomposition;
use crate::rel::Rel;

/// A digraph condensed to its strongly connected components.
#[derive(Debug, Clone)]
pub struct CondensationResult {
    /// Collapse onto the component carrier, `sc : C ~ N`; the
    /// component labels are the least member of each component.
    pub sc: Rel,
    /// The strict acyclic relation between distinct components,
    /// `sc∘G∘sc˘ ∩ ¬I_C`.
    pub dag: Rel,
    /// Member labels of each component, in component-carrier order.
    pub components: Vec<Vec<String>>,
}

/// Condense `g` by its strongly connected components. All structural
/// invariants are asserted before returning. Panics on heterogeneous
/// input.
pub fn condense(g: &Rel) -> CondensationResult {
    assert!(
        g.is_homogeneous(),
        "condense: requires a homogeneous relation, got `{}` ~ `{}`",
        g.target().name(),
        g.source().name()
    );
    let closure = g.rtc();
    let same_scc = diagonal(&closure);
    let sc = split(&same_scc).f;
    let ic = Rel::identity(sc.target());
    let dag = sc.compose(g).compose(&sc.converse()).meet(&ic.complement());

    assert!(
        sc.converse().compose(&sc) == same_scc,
        "condense: sc˘∘sc must be the same-component equivalence (internal defect)"
    );
    assert!(
        sc.converse().compose(&dag.rtc()).compose(&sc) == closure,
        "condense: the closure must factor through the components (internal defect)"
    );
    assert!(
        ic.meet(&dag.tc()).is_empty(),
        "condense: the component relation must be acyclic (internal defect)"
    );
    assert!(dag.rtc().meet(&dag.rtc().converse()) == ic);

    let components = (0..sc.target().size())
        .map(|c| {
            (0..g.target().size())
                .filter(|&v| sc.get(c, v))
                .map(|v| g.target().label(v).to_string())
                .collect()
        })
        .collect();
    CondensationResult { sc, dag, components }
}

/// Present the reachability closure `rtc(g)` as a block-ordered
/// relation: the decomposition `(sc, rtc(A), sc)`. Verified before
/// returning.
pub fn block_order_of_closure(g: &Rel) -> BlockOrderDecomposition {
    let cond = condense(g);
    let t = cond.dag.rtc();
    let dec = BlockOrderDecomposition {
        f: cond.sc.clone(),
        t,
        g: cond.sc,
    };
    dec.verify();
    assert!(
        dec.recompose() == g.rtc(),
        "block_order_of_closure: sc˘∘rtc(A)∘sc must equal rtc(G) (internal defect)"
    );
    dec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use crate::order::{block_decompose, representation_iso};
    use std::sync::Arc;

    fn c(name: &str, n: usize) -> Arc<Carrier> {
        Carrier::numbered(name, n)
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> Rel {
        let v = c("V", n);
        Rel::from_pairs(&v, &v, edges.iter().copied())
    }

    #[test]
    fn empty_graph_gives_singletons() {
        let g = graph(3, &[]);
        let cond = condense(&g);
        assert_eq!(cond.sc.target().size(), 3);
        assert!(cond.dag.is_empty());
        assert_eq!(cond.components, vec![vec!["0"], vec!["1"], vec!["2"]]);
    }

    #[test]
    fn two_cycle_is_one_component() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        let cond = condense(&g);
        assert_eq!(cond.sc.target().size(), 1);
        assert!(cond.dag.is_empty());
        assert_eq!(cond.components, vec![vec!["0", "1"]]);
    }

    #[test]
    fn two_components_with_tail() {
        // Cycle {0,1} → cycle {2,3} → sink 4.
        let g = graph(
            5,
            &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (3, 4)],
        );
        let cond = condense(&g);
        assert_eq!(cond.sc.target().size(), 3);
        assert_eq!(
            cond.components,
            vec![vec!["0", "1"], vec!["2", "3"], vec!["4"]]
        );
        assert_eq!(cond.sc.target().labels(), ["0", "2", "4"]);
        // The component order is the 3-chain.
        let cc = cond.sc.target();
        assert_eq!(cond.dag, Rel::from_pairs(cc, cc, [(0, 1), (1, 2)]));
    }

    #[test]
    fn closure_decomposition_agrees_with_generic_path() {
        // Both block_order_of_closure(G) and block_decompose(rtc(G))
        // decompose the same relation; they must be isomorphic.
        for (n, edges) in [
            (5usize, vec![(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (3, 4)]),
            (4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]),
            (3, vec![(0, 0), (1, 2)]),
            (1, vec![(0, 0)]),
            (0, vec![]),
        ] {
            let g = graph(n, &edges);
            let d1 = block_order_of_closure(&g);
            let d2 = block_decompose(&g.rtc()).unwrap();
            let phi = representation_iso(&d1, &d2).unwrap();
            assert_eq!(phi.compose(&d2.t), d1.t.compose(&phi));
        }
    }

    #[test]
    fn condensation_idempotent_on_its_own_output() {
        let g = graph(6, &[(0, 1), (1, 0), (2, 1), (2, 3), (3, 4), (4, 2), (5, 0)]);
        let cond = condense(&g);
        let again = condense(&cond.dag);
        // Acyclic input: every component is a singleton and the
        // condensed relation has the same pairs.
        assert_eq!(again.sc.target().size(), cond.dag.target().size());
        assert!(again.components.iter().all(|m| m.len() == 1));
        assert_eq!(again.dag.pairs(), cond.dag.pairs());
    }

    #[test]
    fn pseudo_random_graphs_satisfy_invariants() {
        for k in 0..40usize {
            let n = 1 + k % 7;
            let v = c("V", n);
            let g = Rel::from_fn(&v, &v, |x, y| (x * 13 + y * 31 + k * 7) % 11 < 3);
            let cond = condense(&g);
            let total: usize = cond.components.iter().map(|m| m.len()).sum();
            assert_eq!(total, n, "components must partition the nodes");
            block_order_of_closure(&g);
        }
    }
}
