//! Staircase (Ferrers) relations: the four-way test battery, and how
//! staircases sit inside the block-ordered relations.
//!
//! Run with `cargo run --example staircases`.

use relkit::generate::all_rels;
use relkit::order::{is_block_ordered, is_staircase, staircase_battery};
use relkit::{Carrier, Rel};

fn main() {
    // Rows that nest like a staircase: each person's files contain the
    // previous person's.
    let people = Carrier::new("People", ["intern", "senior", "boss"]).unwrap();
    let files = Carrier::new("Files", ["f1", "f2", "f3"]).unwrap();
    let access = Rel::make(
        &people,
        &files,
        [
            ("intern", "f1"),
            ("senior", "f1"),
            ("senior", "f2"),
            ("boss", "f1"),
            ("boss", "f2"),
            ("boss", "f3"),
        ],
    )
    .unwrap();
    let battery = staircase_battery(&access);
    println!("staircase test on nested access rows, four independent formulations:");
    for (name, verdict) in battery.forms.iter() {
        println!("  {name}: {verdict}");
    }
    assert!(battery.verdict());

    // The identity on two points is the classic non-staircase: its two
    // rows are incomparable. It is nevertheless block-ordered (each
    // point is its own block), so block-ordered does not imply
    // staircase.
    let two = Carrier::numbered("I", 2);
    let i2 = Rel::identity(&two);
    let battery = staircase_battery(&i2);
    assert!(battery.agree() && !battery.verdict());
    assert!(is_block_ordered(&i2));
    println!("the 2-point identity: block-ordered but not a staircase.");

    // The other inclusion does hold on finite carriers: sweep every
    // 3×3 relation, and every staircase among them is block-ordered.
    let n3 = Carrier::numbered("N", 3);
    let mut stairs = 0usize;
    let mut blocky = 0usize;
    for r in all_rels(&n3, &n3).unwrap() {
        let s = is_staircase(&r);
        let b = is_block_ordered(&r);
        if s {
            stairs += 1;
            assert!(b, "a finite staircase must be block-ordered: {r:?}");
        }
        if b {
            blocky += 1;
        }
    }
    assert!(stairs < blocky);
    println!(
        "among all 512 relations on 3×3: {stairs} staircases, every one block-ordered; \
{blocky} block-ordered relations in total."
    );

    // A membership relation is never a staircase once two elements are
    // present: singleton rows are incomparable.
    let sets = Carrier::new("Sets", ["{}", "{x}", "{y}", "{x,y}"]).unwrap();
    let u = Carrier::new("U", ["x", "y"]).unwrap();
    let memb = Rel::make(
        &sets,
        &u,
        [("{x}", "x"), ("{y}", "y"), ("{x,y}", "x"), ("{x,y}", "y")],
    )
    .unwrap();
    assert!(!is_staircase(&memb));
    println!("membership on the power set of two points is not a staircase.");
}
