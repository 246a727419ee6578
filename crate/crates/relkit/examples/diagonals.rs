//! The diagonal operator ΔR = R ∩ (R\R/R)˘ on chains, equivalences,
//! and membership relations, plus its commutation with converse.
//!
//! Run with `cargo run --example diagonals`.

use relkit::diagonal::diagonal;
use relkit::generate::{gen_equivalence, rand_rel, Budget};
use relkit::{Carrier, Rel};

fn main() {
    // On the reflexive chain ≤ the diagonal is exactly the identity;
    // on the strict chain < it is the successor relation.
    let n4 = Carrier::numbered("N", 4);
    let le = Rel::from_fn(&n4, &n4, |a, b| a <= b);
    let lt = Rel::from_fn(&n4, &n4, |a, b| a < b);
    assert_eq!(diagonal(&le), Rel::identity(&n4));
    assert_eq!(diagonal(&lt), Rel::from_pairs(&n4, &n4, [(0, 1), (1, 2), (2, 3)]));
    println!("Δ(≤ on 4 points) is the identity; Δ(< on 4 points) is the successor step:");
    println!("{}", diagonal(&lt).to_grid_string());

    // An equivalence is its own diagonal.
    let c5 = Carrier::numbered("E", 5);
    let budget = Budget::smoke();
    let mut rng = budget.rng("diagonals");
    for _ in 0..10 {
        let e = gen_equivalence(&mut rng, &c5);
        assert_eq!(diagonal(&e), e);
    }
    println!("ten random equivalences each equal their own diagonal.");

    // The membership relation between the subsets of {x, y} and its
    // elements: the diagonal keeps exactly the singleton memberships.
    let sets = Carrier::new("Sets", ["{}", "{x}", "{y}", "{x,y}"]).unwrap();
    let u = Carrier::new("U", ["x", "y"]).unwrap();
    let memb = Rel::make(
        &sets,
        &u,
        [("{x}", "x"), ("{y}", "y"), ("{x,y}", "x"), ("{x,y}", "y")],
    )
    .unwrap();
    let singletons = Rel::make(&sets, &u, [("{x}", "x"), ("{y}", "y")]).unwrap();
    assert_eq!(diagonal(&memb), singletons);
    println!("Δ(∈) on the power set of {{x, y}} keeps only the singleton memberships:");
    println!("{}", diagonal(&memb).to_grid_string());

    // Δ commutes with converse: Δ(R˘) = (ΔR)˘, checked on random
    // heterogeneous relations of every density.
    let a = Carrier::numbered("A", 5);
    let b = Carrier::numbered("B", 3);
    for i in 0..30 {
        let r = rand_rel(&mut rng, &a, &b, 0.1 + 0.8 * (i as f64 / 29.0));
        assert_eq!(diagonal(&r.converse()), diagonal(&r).converse());
    }
    println!("Δ commutes with converse on thirty random relations.");

    // The diagonal is always contained in its relation and taking it
    // twice changes nothing more. (Δ is not idempotent in general, but
    // ΔR is always difunctional, and a difunctional relation is its
    // own diagonal.)
    for _ in 0..30 {
        let r = rand_rel(&mut rng, &a, &b, 0.5);
        let d = diagonal(&r);
        assert!(d.leq(&r));
        assert_eq!(diagonal(&d), d);
    }
    println!("ΔR ⊆ R and Δ(ΔR) = ΔR on thirty more.");
}
