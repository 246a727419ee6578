//! Per indexes, splittings, relation indexes, cores with their
//! collapsing witnesses, and isomorphism of cores under different
//! representative choices.
//!
//! Run with `cargo run --example indexes_and_cores`.

use relkit::domain::{is_per, per_ldom};
use relkit::index::{
    are_isomorphic, core_of_with, is_core, is_index, is_per_index, per_index_with, rel_index,
    split, TieBreak,
};
use relkit::{Carrier, Rel};

fn main() {
    // A menu where two dishes share their exact ingredient list.
    let dishes = Carrier::new("Dishes", ["stew", "soup", "bread", "cake"]).unwrap();
    let stuff = Carrier::new("Ingredients", ["water", "salt", "flour", "sugar"]).unwrap();
    let menu = Rel::make(
        &dishes,
        &stuff,
        [
            ("stew", "water"),
            ("stew", "salt"),
            ("soup", "water"),
            ("soup", "salt"),
            ("bread", "flour"),
            ("bread", "salt"),
            ("cake", "flour"),
            ("cake", "sugar"),
        ],
    )
    .unwrap();
    println!("menu : Dishes ~ Ingredients");
    println!("{}", menu.to_grid_string());

    // The left per domain groups dishes with identical rows; a per
    // index picks one representative pair per class, and the choice of
    // representative is a genuine degree of freedom.
    let p = per_ldom(&menu);
    assert!(is_per(&p));
    let j_first = per_index_with(&p, TieBreak::First);
    let j_last = per_index_with(&p, TieBreak::Last);
    assert!(is_per_index(&j_first, &p) && is_per_index(&j_last, &p));
    assert_ne!(j_first, j_last, "stew and soup tie, so the two tie-breaks disagree");
    println!("per index, first-wins picks stew; last-wins picks soup:");
    println!("{}", j_first.to_grid_string());

    // Splitting a per produces a fresh class carrier and the
    // projection onto it, with both defining equations.
    let s = split(&p);
    assert_eq!(s.f.converse().compose(&s.f), p);
    assert_eq!(s.f.compose(&s.f.converse()), Rel::identity(s.class_carrier()));
    println!(
        "split of the row per: classes {:?} project by f : {} ~ Dishes.",
        s.class_carrier().labels(),
        s.class_carrier().name()
    );

    // A relation index keeps one entry per block pair.
    let j = rel_index(&menu);
    assert!(is_index(&j, &menu));
    println!("rel index (one pair per block pair):");
    println!("{}", j.to_grid_string());

    // The core collapses both per domains at once. Its witness
    // recomposes the original exactly, and the core has no duplicate
    // rows or columns left.
    let first = core_of_with(&menu, TieBreak::First);
    first.verify(&menu);
    assert!(is_core(&first.core));
    assert_eq!(first.recompose(), menu);
    println!("core (first-wins), {}×{}:", first.core.target().size(), first.core.source().size());
    println!("{}", first.core.to_grid_string());

    // A different tie-break yields a literally different core over
    // differently-labelled class carriers — but the two cores are
    // isomorphic, with machine-checked witnesses.
    let last = core_of_with(&menu, TieBreak::Last);
    last.verify(&menu);
    assert_ne!(first.core, last.core, "class labels differ with the representative");
    let verdict = are_isomorphic(&first.core, &last.core);
    assert!(verdict.is_found());
    println!("the two tie-break cores differ literally but are isomorphic.");

    // Taking the core of a core changes nothing essential: the core of
    // a core is a core, and it is isomorphic to what it came from.
    let again = core_of_with(&first.core, TieBreak::First);
    again.verify(&first.core);
    assert!(is_core(&again.core));
    assert!(are_isomorphic(&again.core, &first.core).is_found());
    println!("the core of a core is a core, isomorphic to its input.");
}
