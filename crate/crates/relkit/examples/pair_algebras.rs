//! Galois adjoints of a relation between two finite complete
//! lattices: when they exist, what they look like, and a relation
//! with only one of the two.
//!
//! Run with `cargo run --example pair_algebras`.

use relkit::pair::{adjoints, check_complete_lattice, is_pair_algebra, lower_adjoint, upper_adjoint};
use relkit::{Carrier, Rel};

fn main() {
    // The divisors of 6 under divisibility form a complete lattice
    // (it is the 2×2 Boolean lattice).
    let l = Carrier::new("Div6", ["1", "2", "3", "6"]).unwrap();
    let value = |s: &str| s.parse::<u32>().unwrap();
    let div = Rel::from_fn(&l, &l, |a, b| value(l.label(b)) % value(l.label(a)) == 0);
    check_complete_lattice(&div).unwrap();
    println!("divisibility on {{1,2,3,6}} is a complete lattice:");
    println!("{}", div.to_grid_string());

    // The order itself, read as a relation from the lattice to
    // itself, has both adjoints — and both are the identity: a ⊑ b
    // already means id.a ⊑ b and a ⊑ id.b.
    let (lo, up) = adjoints(&div, &div, &div).unwrap();
    let (lo, up) = (lo.unwrap(), up.unwrap());
    assert_eq!(lo, Rel::identity(&l));
    assert_eq!(up, Rel::identity(&l));
    assert_eq!(div, lo.converse().compose(&div), "lower adjoint equation R = F˘∘⊑");
    assert_eq!(div, div.compose(&up), "upper adjoint equation R = ⊑∘G");
    assert!(is_pair_algebra(&div, &div, &div).unwrap());
    println!("the order itself is a pair algebra; both adjoints are the identity.");

    // "Properly divides" on the same lattice has neither adjoint: the
    // fiber of 6 is empty, which forces the candidate F.6 = ⊤ = 6 and
    // would wrongly make 6 relate to itself; dually for the column
    // of 1 on the upper side.
    let strict = Rel::from_fn(&l, &l, |a, b| {
        a != b && value(l.label(b)) % value(l.label(a)) == 0
    });
    assert!(lower_adjoint(&strict, &div).unwrap().is_none());
    assert!(upper_adjoint(&strict, &div).unwrap().is_none());
    println!("proper divisibility has neither adjoint.");

    // One adjoint without the other: between two 2-chains, relate
    // `hi` to both levels and `lo` only to the top. Every fiber is a
    // principal filter (so the lower adjoint exists), but the
    // columns are not principal ideals (so the upper one does not).
    let p = Carrier::new("P", ["p-lo", "p-hi"]).unwrap();
    let q = Carrier::new("Q", ["q-lo", "q-hi"]).unwrap();
    let chain_p = Rel::from_fn(&p, &p, |a, b| a <= b);
    let chain_q = Rel::from_fn(&q, &q, |a, b| a <= b);
    let r = Rel::make(&p, &q, [("p-hi", "q-lo"), ("p-lo", "q-hi"), ("p-hi", "q-hi")]).unwrap();
    let (lo, up) = adjoints(&r, &chain_p, &chain_q).unwrap();
    assert!(lo.is_some() && up.is_none());
    assert!(!is_pair_algebra(&r, &chain_p, &chain_q).unwrap());
    println!("between two 2-chains: lower adjoint present, upper absent — not a pair algebra:");
    println!("{}", lo.unwrap().to_grid_string());

    // Orders that are not complete lattices are refused up front: the
    // 2-point antichain has no top.
    let two = Carrier::numbered("A", 2);
    let discrete = Rel::identity(&two);
    assert!(check_complete_lattice(&discrete).is_err());
    assert!(lower_adjoint(&Rel::top(&two, &two), &discrete).is_err());
    println!("the 2-point antichain is rejected: not a complete lattice.");
}
