//! Interval algebra walkthrough: points, bounds, ranges, the set operators,
//! and containment with open/closed endpoints.
//!
//! Run with: cargo run --example intervals

use quantail::interval::{Interval, SetOutcome};
use quantail::value::num_from_i64 as n;

fn show_set(label: &str, outcome: SetOutcome) {
    match outcome {
        SetOutcome::Interval(iv) => println!("{label} = {iv}"),
        SetOutcome::Empty => println!("{label} = (empty)"),
        SetOutcome::Invalid => println!("{label} = (not a contiguous interval)"),
    }
}

fn main() {
    // Single values are degenerate closed intervals.
    let three = Interval::point(n(3));
    let one = Interval::point(n(1));
    println!("{} - {} = {}", three, one, three.sub(&one).unwrap());
    println!("{} / {} -> {:?}", three, Interval::point(n(0)), three.div(&Interval::point(n(0))));

    // Bound phrases become half-open rays.
    let fewer_than_10 = Interval::less_than(n(10));
    let at_least_3 = Interval::at_least(n(3));
    println!("\"fewer than 10\"  -> {fewer_than_10}");
    println!("\"at least 3\"     -> {at_least_3}");
    show_set("their intersection", fewer_than_10.intersect(&at_least_3));

    // Explicit ranges and the set operators.
    let a = Interval::closed(n(1), n(5)).unwrap();
    let b = Interval::closed(n(3), n(7)).unwrap();
    let c = Interval::closed(n(8), n(9)).unwrap();
    show_set(&format!("{a} ∩ {b}"), a.intersect(&b));
    show_set(&format!("{a} ∪ {b}"), a.union(&b));
    show_set(&format!("{a} ∪ {c}"), a.union(&c));
    show_set(&format!("{a} ∖ {b}"), a.setminus(&b));

    // Containment respects endpoint openness.
    let hundred = Interval::point(n(100));
    let under_700 = Interval::less_than(n(700));
    println!("{hundred} ⊆ {under_700} -> {}", hundred.is_subset_of(&under_700));
    let open_hi = Interval::new(
        quantail::interval::Endpoint::Finite(n(1)),
        quantail::interval::Endpoint::Finite(n(5)),
        false,
        true,
    )
    .unwrap();
    println!("{open_hi} ⊆ {a} -> {}", open_hi.is_subset_of(&a));
    println!("{a} ⊆ {open_hi} -> {}", a.is_subset_of(&open_hi));
}
