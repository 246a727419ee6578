//! Condensing a digraph to its strongly connected components inside
//! the relation algebra, and factoring the reachability closure as a
//! block ordering.
//!
//! Run with `cargo run --example condensation`.

use relkit::condense::{block_order_of_closure, condense};
use relkit::domain::{is_functional, rdom};
use relkit::{Carrier, Rel};

fn main() {
    // Six nodes, two 2-cycles, and a path across them.
    let n = Carrier::numbered("G", 6);
    let g = Rel::from_pairs(&n, &n, [(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (2, 4), (4, 5)]);
    println!("edges : G ~ G");
    println!("{}", g.to_grid_string());

    let c = condense(&g);
    println!("strongly connected components:");
    for (i, members) in c.components.iter().enumerate() {
        println!("  component {}: {}", c.sc.target().label(i), members.join(" "));
    }
    assert_eq!(
        c.components,
        vec![
            vec!["0".to_string(), "1".to_string()],
            vec!["2".to_string(), "3".to_string()],
            vec!["4".to_string()],
            vec!["5".to_string()],
        ]
    );

    // The collapse sc : C ~ G maps every node to exactly one
    // component — functional and total on the nodes — and the
    // component relation between distinct blocks is strict and acyclic.
    assert!(is_functional(&c.sc));
    assert_eq!(rdom(&c.sc), Rel::identity(&n));
    assert_eq!(c.sc.compose(&c.sc.converse()), Rel::identity(c.sc.target()));
    assert!(c.dag.meet(&Rel::identity(c.dag.target())).is_empty());
    assert!(c.dag.tc().meet(&Rel::identity(c.dag.target())).is_empty());
    println!("component dag (irreflexive, acyclic):");
    println!("{}", c.dag.to_grid_string());

    // Reachability factors through the components: the reflexive-
    // transitive closure of the graph is a block-ordered relation
    // whose blocks are exactly the components.
    let d = block_order_of_closure(&g);
    d.verify();
    assert_eq!(d.recompose(), g.rtc());
    assert_eq!(d.t.target().size(), c.components.len());
    println!("the closure factors as f˘∘T∘g over {} blocks, T below:", d.t.target().size());
    println!("{}", d.t.to_grid_string());

    // T is the reflexive companion of the dag on the same blocks.
    assert_eq!(
        d.t,
        c.dag.rtc(),
        "the block ordering of the closure is the reflexive-transitive dag"
    );
    println!("T equals the reflexive-transitive closure of the component dag.");
}
