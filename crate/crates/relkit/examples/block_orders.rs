//! Deciding block-orderedness and factoring a block-ordered relation
//! as f˘∘T∘g with T a provisional ordering of blocks.
//!
//! Run with `cargo run --example block_orders`.

use relkit::order::{block_decompose, is_block_ordered, preorder_block_order};
use relkit::{Carrier, Rel};

fn main() {
    // Nested file access: intern and junior see the same single file,
    // senior sees more, boss sees everything.
    let people = Carrier::new("People", ["intern", "junior", "senior", "boss"]).unwrap();
    let files = Carrier::new("Files", ["f1", "f2", "f3"]).unwrap();
    let access = Rel::make(
        &people,
        &files,
        [
            ("intern", "f1"),
            ("junior", "f1"),
            ("senior", "f1"),
            ("senior", "f2"),
            ("boss", "f1"),
            ("boss", "f2"),
            ("boss", "f3"),
        ],
    )
    .unwrap();
    println!("access : People ~ Files");
    println!("{}", access.to_grid_string());

    assert!(is_block_ordered(&access));
    let d = block_decompose(&access).unwrap();
    d.verify();
    assert_eq!(d.recompose(), access);
    println!("block-ordered: yes; it factors as f˘∘T∘g with T the block ordering:");
    println!("{}", d.t.to_grid_string());
    println!("f collapses people onto blocks:");
    println!("{}", d.f.to_grid_string());
    println!("g collapses files onto the same blocks:");
    println!("{}", d.g.to_grid_string());
    assert!(d.is_linear(), "nested rows give a linear block ordering");

    // A relation that covers both carriers yet is not block-ordered:
    // its diagonal loses row 1, so the diagonal no longer spans the
    // domains.
    let n3 = Carrier::numbered("N", 3);
    let skew = Rel::from_pairs(&n3, &n3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)]);
    assert!(!is_block_ordered(&skew));
    assert!(block_decompose(&skew).is_err());
    println!("the 3×3 overlap relation is not block-ordered; decomposition refuses it.");

    // Every provisional preorder is block-ordered over its own blocks:
    // mutually comparable elements collapse together and the blocks
    // inherit the order.
    let t3 = Carrier::new("T", ["x", "y", "z"]).unwrap();
    let pre = Rel::make(
        &t3,
        &t3,
        [
            ("x", "x"),
            ("y", "y"),
            ("z", "z"),
            ("x", "y"),
            ("y", "x"),
            ("x", "z"),
            ("y", "z"),
        ],
    )
    .unwrap();
    let d = preorder_block_order(&pre).unwrap();
    assert_eq!(d.recompose(), pre);
    assert_eq!(d.t.target().size(), 2, "x and y collapse into one block below z");
    println!("the preorder with x ≈ y ⊑ z collapses to a 2-point block ordering:");
    println!("{}", d.t.to_grid_string());
}
