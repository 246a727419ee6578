//! Domains, per domains, functionality predicates, and the seven-way
//! difunctionality battery.
//!
//! Run with `cargo run --example domains_and_pers`.

use relkit::domain::{
    difunctional_battery, is_bijection, is_functional, is_injective, is_per, is_rectangle,
    is_square, ldom, per_ldom, per_rdom, rdom,
};
use relkit::generate::{gen_difunctional, Budget};
use relkit::{Carrier, Rel};

fn main() {
    let people = Carrier::new("People", ["ann", "ben", "cal", "dan"]).unwrap();
    let langs = Carrier::new("Langs", ["en", "fr", "de", "eo"]).unwrap();

    // ann and ben speak the same two languages, cal another one, dan
    // none at all; nobody speaks eo.
    let speaks = Rel::make(
        &people,
        &langs,
        [("ann", "en"), ("ann", "fr"), ("ben", "en"), ("ben", "fr"), ("cal", "de")],
    )
    .unwrap();
    println!("speaks : People ~ Langs");
    println!("{}", speaks.to_grid_string());

    // The left domain is the coreflexive of targets with a nonempty
    // row; the right domain is its mirror on the source carrier.
    let l = ldom(&speaks);
    let r = rdom(&speaks);
    assert!(l.is_coreflexive() && r.is_coreflexive());
    assert_eq!(
        l,
        Rel::make(&people, &people, [("ann", "ann"), ("ben", "ben"), ("cal", "cal")]).unwrap()
    );
    assert_eq!(
        r,
        Rel::make(&langs, &langs, [("en", "en"), ("fr", "fr"), ("de", "de")]).unwrap()
    );
    // Both agree with their definitional forms I ∩ R∘R˘ and I ∩ R˘∘R.
    assert_eq!(l, Rel::identity(&people).meet(&speaks.compose(&speaks.converse())));
    assert_eq!(r, Rel::identity(&langs).meet(&speaks.converse().compose(&speaks)));
    println!("left domain: {} speakers; right domain: {} spoken languages.", l.count(), r.count());

    // The per domains refine the domains into partial equivalences:
    // two people are per-left related when their language rows agree
    // (and are nonempty), dually for languages and columns.
    let pl = per_ldom(&speaks);
    let pr = per_rdom(&speaks);
    assert!(is_per(&pl) && is_per(&pr));
    assert!(pl.get(0, 1), "ann and ben have identical rows");
    assert!(!pl.get(3, 3), "dan speaks nothing, so dan is outside the per");
    assert!(pr.get(0, 1), "en and fr have identical columns");
    assert!(!pr.get(3, 3), "eo is spoken by nobody");
    println!("per domains: {} row-agreement pairs, {} column-agreement pairs.", pl.count(), pr.count());

    // Functionality predicates. `native` maps each person to at most
    // one language and no two people share one, so it is functional,
    // injective, and hence a bijection between its domains.
    let native =
        Rel::make(&people, &langs, [("ann", "en"), ("ben", "fr"), ("cal", "de")]).unwrap();
    assert!(is_functional(&native) && is_injective(&native) && is_bijection(&native));
    assert!(!is_functional(&speaks), "ann speaks two languages");
    assert!(!is_injective(&speaks), "en has two speakers");
    println!("native is a bijection between its domains; speaks is neither functional nor injective.");

    // A rectangle satisfies R = R∘⊤∘R; a square is a symmetric
    // rectangle, and every square is a per.
    let block = Rel::make(&people, &langs, [("ann", "en"), ("ann", "fr"), ("ben", "en"), ("ben", "fr")])
        .unwrap();
    assert!(is_rectangle(&block) && !is_rectangle(&speaks));
    let square = Rel::make(&people, &people, [("ann", "ann"), ("ann", "ben"), ("ben", "ann"), ("ben", "ben")])
        .unwrap();
    assert!(is_square(&square) && is_per(&square));
    println!("the {{ann,ben}}×{{en,fr}} block is a rectangle; its left shadow is a square.");

    // The difunctionality battery evaluates seven equivalent
    // characterizations independently and they must agree. `speaks` is
    // difunctional (it is a union of disjoint rectangles); adding one
    // stray pair breaks that.
    let battery = difunctional_battery(&speaks);
    println!("difunctionality of speaks, seven ways:");
    for (name, verdict) in battery.forms.iter() {
        println!("  {name}: {verdict}");
    }
    assert!(battery.verdict());

    let mut stray = speaks.clone();
    stray.set(2, 0, true); // cal also speaks en, overlapping ann's column
    let battery = difunctional_battery(&stray);
    assert!(battery.agree() && !battery.verdict());
    println!("one stray pair breaks difunctionality; all seven forms still agree.");

    // And the battery agrees on generated difunctional relations.
    let budget = Budget::smoke();
    let mut rng = budget.rng("domains-and-pers");
    for _ in 0..20 {
        let d = gen_difunctional(&mut rng, &people, &langs);
        assert!(difunctional_battery(&d).verdict());
    }
    println!("twenty generated difunctional relations all pass the battery.");
}
