//! End-to-end classification of premise/hypothesis pairs: segment, parse,
//! prune, compose, and aggregate into an entailment label with evidence.
//!
//! Run with: cargo run --example classify_pair

use quantail::lexicon::LexiconSet;
use quantail::numset::{BinaryLabel, GoldLabel, SentencePair};
use quantail::reason::{classify_pair, EngineParams};

fn classify(lex: &LexiconSet, params: &EngineParams, premise: &str, hypothesis: &str, arity: u8) {
    let pair = SentencePair {
        id: "example".to_string(),
        premise: premise.to_string(),
        hypothesis: hypothesis.to_string(),
        gold: GoldLabel::Binary(BinaryLabel::Entails),
        dataset: "example".to_string(),
        arity,
    };
    let c = classify_pair(&pair, lex, params);
    println!("P: {premise}");
    println!("H: {hypothesis}");
    let label = if arity == 2 { c.label.to_binary().to_string() } else { c.label.to_string() };
    println!("-> {label}  (context similarity {:.2})", c.context_similarity);
    for (h, eq) in &c.equations {
        println!("   H{} justified by: {}", h + 1, eq);
    }
    println!();
}

fn main() {
    let lex = LexiconSet::embedded();
    let params = EngineParams::default();

    classify(
        &lex,
        &params,
        "Each of farmer Cunningham's 6048 lambs is either black or white and there are 193 white ones.",
        "5855 of Farmer Cunningham's lambs are black.",
        2,
    );
    classify(
        &lex,
        &params,
        "I had 3 apples but gave 1 apple to my brother.",
        "I have 2 apples.",
        2,
    );
    classify(
        &lex,
        &params,
        "NHAI employs 100 men to build a highway of 2 km in 50 days working 8 hours a day",
        "NHAI employs more than 700 men to build a highway of 2 km in 50 days working 8 hours a day",
        3,
    );
    classify(
        &lex,
        &params,
        "Between 20 and 30 people were trapped in the casino.",
        "Up to 35 people were trapped in the casino.",
        2,
    );
    classify(
        &lex,
        &params,
        "The attack killed 4 soldiers.",
        "The fire destroyed 4 houses.",
        3,
    );
}
