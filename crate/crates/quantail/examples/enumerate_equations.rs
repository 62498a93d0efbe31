//! Constrained postfix-equation synthesis: enumerate every valid equation
//! over a symbol list, then evaluate which ones justify the hypothesis.
//!
//! Run with: cargo run --example enumerate_equations

use quantail::compose::{enumerate_equations, evaluate, EquationOutcome, Operand, SymbolList};
use quantail::interval::Interval;
use quantail::value::num_from_i64 as n;

fn operand(value: Interval, type_index: usize, label: &str) -> Operand {
    Operand { value, type_index, is_rate: false, label: label.to_string() }
}

fn show(title: &str, sl: &SymbolList) {
    println!("{title}");
    let equations = enumerate_equations(sl, 3, 50);
    println!("  {} structurally valid equations (depth <= 3, cap 50):", equations.len());
    for eq in &equations {
        let outcome = evaluate(sl, eq);
        let tag = match outcome {
            EquationOutcome::Justified => "justified",
            EquationOutcome::Unjustified => "unjustified",
            EquationOutcome::Invalid => "invalid",
        };
        println!("    {:<24} {}", eq.render(sl), tag);
    }
    println!();
}

fn main() {
    // "I had 3 apples but gave one to my brother" / "I have two apples".
    let apples = SymbolList {
        singles: vec![operand(Interval::point(n(3)), 0, "P1"), operand(Interval::point(n(1)), 0, "P2")],
        ranges: vec![],
        hyp: operand(Interval::point(n(2)), 0, "H1"),
    };
    show("3 apples, gave 1 -> hypothesis 2 apples", &apples);

    // "NHAI employs 100 men" / "less than 700 men".
    let bound = SymbolList {
        singles: vec![operand(Interval::point(n(100)), 0, "P1")],
        ranges: vec![],
        hyp: operand(Interval::less_than(n(700)), 0, "H1"),
    };
    show("100 men -> hypothesis fewer than 700 men", &bound);

    // Rate multiplication: 4 baskets x 6 apples each -> 24 apples.
    let rate = SymbolList {
        singles: vec![
            operand(Interval::point(n(4)), 0, "P1"),
            Operand {
                value: Interval::point(n(6)),
                type_index: 1,
                is_rate: true,
                label: "P2".to_string(),
            },
        ],
        ranges: vec![],
        hyp: operand(Interval::point(n(24)), 1, "H1"),
    };
    show("4 baskets of 6 apples each -> hypothesis 24 apples", &rate);

    // Range operators need range operands.
    let ranges = SymbolList {
        singles: vec![],
        ranges: vec![
            operand(Interval::closed(n(1), n(5)).unwrap(), 0, "P1"),
            operand(Interval::closed(n(3), n(7)).unwrap(), 0, "P2"),
        ],
        hyp: operand(Interval::closed(n(2), n(6)).unwrap(), 0, "H1"),
    };
    show("[1,5] and [3,7] -> hypothesis [2,6]", &ranges);
}
