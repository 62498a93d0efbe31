//! Segment sentences into quantity mentions and parse them into grounded
//! tuples (value interval, unit, entity, adjective, verb, frequency, flux).
//!
//! Run with: cargo run --example parse_quantities

use quantail::lexicon::LexiconSet;
use quantail::numset::Source;
use quantail::parse::parse_sentence;
use quantail::segment::segment;

fn main() {
    let lex = LexiconSet::embedded();
    let sentences = [
        "Teva will generate sales of about $ 7 billion a year, the company said.",
        "Each of farmer Cunningham's 6048 lambs is either black or white and there are 193 white ones.",
        "Between 20 and 30 people were trapped in the casino.",
        "Rwanda has dispatched some 1900 soldiers.",
        "NHAI employs less than 700 men to build a highway of 2 km in 50 days.",
        "Oil prices rose to 50 dollars a barrel.",
        "1 in 4 Londoners have the bacteria.",
        "The petition gathered hundred fifty eight thousand signatures.",
        "He was born in 1984.",
    ];
    for sentence in sentences {
        println!("{sentence}");
        let mentions = segment(sentence, &lex);
        if mentions.is_empty() {
            println!("  (no quantity mentions)");
        }
        for m in &mentions {
            let text: Vec<&str> = m.tokens.iter().map(|t| t.text.as_str()).collect();
            println!("  mention '{}' -> {}", text.join(" "), m.raw_value);
        }
        let (numsets, diagnostics) = parse_sentence(sentence, &lex, Source::Premise);
        for ns in &numsets {
            println!("  numset: {ns}");
        }
        for d in &diagnostics {
            println!("  note: {d}");
        }
        println!();
    }
}
